#include <stdexcept>

#include "systolic/geodesic_engine.hpp"
#include "systolic/surface_model.hpp"

namespace systolic {
namespace {

// Enough chimneys that every gap class has interior neighbours on both sides.
constexpr int kProbePunctures = 7;

}  // namespace

RowFeasibility row_feasibility(int rows) {
  if (rows < 1) throw std::invalid_argument("row count must be positive");
  if (rows % 2 == 0) {
    throw std::invalid_argument("(1, " + std::to_string(rows) + ") is not a lattice translation");
  }
  const CylinderLattice lattice(rows);
  RowFeasibility report;
  report.rows = rows;
  report.meridian_length = lattice.circumference();
  report.radius = matched_radius(lattice);
  report.clearance = lattice.half_spacing();

  if (report.radius.sign() <= 0) {
    report.obstructions.push_back(Obstruction::negative_radius);
  } else {
    if (report.radius >= ExactLength(1)) report.obstructions.push_back(Obstruction::overlapping_discs);
    if (report.radius > report.clearance) report.obstructions.push_back(Obstruction::clearance_failure);

    if (report.radius < ExactLength(1)) {
      const SphereModel model =
          build(SurfaceParams{kProbePunctures, report.radius, rows}, BuildMode::exploratory);
      // Every essential class at or below the meridian length; anything
      // strictly shorter than a straight meridian breaks the construction.
      const ShortClassEnumeration found = enumerate_short_classes(model, report.meridian_length);
      for (const GeodesicClass& g : found.classes) {
        if (g.shortest_length && *g.shortest_length < report.meridian_length) {
          report.obstructions.push_back(Obstruction::shorter_essential);
          break;
        }
      }
      if (!model.meridians_clear()) {
        const MeridianLength blocked = meridian_shortest(model, kProbePunctures / 2);
        report.blocked_meridian_length = blocked.numeric;
      }
    }
  }
  report.feasible = report.obstructions.empty();
  return report;
}

nlohmann::json to_json(const RowFeasibility& report) {
  nlohmann::json obstructions = nlohmann::json::array();
  for (Obstruction o : report.obstructions) obstructions.push_back(to_string(o));
  return {
      {"k", report.rows},
      {"meridian_length", report.meridian_length.to_string()},
      {"radius", report.radius.to_string()},
      {"clearance", report.clearance.to_string()},
      {"feasible", report.feasible},
      {"obstructions", obstructions},
      {"blocked_meridian_length", report.blocked_meridian_length
                                      ? nlohmann::json(*report.blocked_meridian_length)
                                      : nlohmann::json(nullptr)},
  };
}

}  // namespace systolic
