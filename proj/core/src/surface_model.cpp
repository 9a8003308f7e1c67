#include "systolic/surface_model.hpp"

#include <stdexcept>

namespace systolic {

ExactLength matched_radius(const CylinderLattice& lattice) {
  // 4 + 2 pi r = m  <=>  r = (m - 4) / (2 pi)
  return (lattice.circumference() - ExactLength(4)) * ExactLength::pi(Rational(1, 2), -1);
}

SurfaceParams SurfaceParams::standard(int n) {
  return SurfaceParams{n, matched_radius(CylinderLattice(3)), 3};
}

SphereModel::SphereModel(SurfaceParams params, BuildMode mode)
    : params_(std::move(params)), mode_(mode), lattice_(params_.rows) {
  chimneys_.reserve(static_cast<std::size_t>(params_.n));
  for (int s = 1; s <= params_.n; ++s) chimneys_.push_back(Chimney{s});
  left_cut_ = Rational(1, 2);
  right_cut_ = Rational(2 * params_.n + 1, 2);
  caps_ = {Cap{lattice_.circumference()}, Cap{lattice_.circumference()}};
  meridians_clear_ = lattice_.half_spacing() >= params_.radius;
}

ExactLength SphereModel::axial_at(const Rational& index_position) const {
  return half_spacing() * (Rational(2) * index_position);
}

SphereModel build(const SurfaceParams& params, BuildMode mode) {
  const int minimum_n = mode == BuildMode::strict ? 5 : 1;
  if (params.n < minimum_n) {
    throw std::invalid_argument("n = " + std::to_string(params.n) + " is below the minimum " +
                                std::to_string(minimum_n) + " for this build mode");
  }
  const CylinderLattice lattice(params.rows);
  if (params.radius.sign() <= 0) {
    throw std::invalid_argument("chimney radius must be positive, got " +
                                params.radius.to_string());
  }
  if (params.radius >= ExactLength(1)) {
    throw std::invalid_argument("chimney radius " + params.radius.to_string() +
                                " >= 1: neighbouring discs overlap");
  }
  if (mode == BuildMode::strict && params.radius >= lattice.half_spacing()) {
    throw std::invalid_argument("clearance violated: radius " + params.radius.to_string() +
                                " >= h = " + lattice.half_spacing().to_string() +
                                ", no straight meridian exists");
  }
  return SphereModel(params, mode);
}

ConstantsReport constants_report(const SurfaceParams& params) {
  const CylinderLattice lattice(params.rows);
  ConstantsReport report;
  report.meridian_length = lattice.circumference();
  report.radius = params.radius;
  report.clearance = lattice.half_spacing();
  report.belt_length = ExactLength(4) + ExactLength::pi(2) * params.radius;
  report.belt_equals_meridian = report.belt_length == report.meridian_length;
  const ExactLength quarter(Rational(1, 4));
  report.radius_below_quarter = report.radius < quarter;
  report.quarter_below_clearance = quarter < report.clearance;
  return report;
}

std::string to_string(Obstruction obstruction) {
  switch (obstruction) {
    case Obstruction::negative_radius: return "negative_radius";
    case Obstruction::overlapping_discs: return "overlapping_discs";
    case Obstruction::clearance_failure: return "clearance_failure";
    case Obstruction::shorter_essential: return "shorter_essential";
  }
  return "unknown";
}

nlohmann::json to_json(const SphereModel& model) {
  nlohmann::json chimneys = nlohmann::json::array();
  for (const Chimney& c : model.chimneys()) chimneys.push_back(c.axial_index);
  return {
      {"version", kModelSchemaVersion},
      {"n", model.n()},
      {"rows", model.params().rows},
      {"r", model.radius().to_string()},
      {"mode", model.mode() == BuildMode::strict ? "strict" : "exploratory"},
      {"chimneys", chimneys},
      {"cuts", {{"left", model.left_cut().get_str()}, {"right", model.right_cut().get_str()}}},
      {"cap_circumference", model.caps()[0].circumference.to_string()},
  };
}

SphereModel model_from_json(const nlohmann::json& document) {
  if (document.at("version").get<int>() != kModelSchemaVersion) {
    throw std::invalid_argument("unsupported model schema version");
  }
  SurfaceParams params;
  params.n = document.at("n").get<int>();
  params.rows = document.at("rows").get<int>();
  params.radius = ExactLength::parse(document.at("r").get<std::string>());
  const std::string mode = document.at("mode").get<std::string>();
  if (mode != "strict" && mode != "exploratory") {
    throw std::invalid_argument("unknown build mode: " + mode);
  }
  SphereModel model = build(params, mode == "strict" ? BuildMode::strict : BuildMode::exploratory);
  if (to_json(model) != document) {
    throw std::invalid_argument("model document is inconsistent with its parameters");
  }
  return model;
}

}  // namespace systolic
