#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "systolic/exact_length.hpp"
#include "systolic/lattice.hpp"

namespace systolic {

/// Radius r with 4 + 2*pi*r equal to the cylinder circumference, i.e. the
/// radius at which a belt around two neighbouring chimneys is exactly as long
/// as a straight meridian. For three rows: (sqrt(28) - 4) / (2 pi).
ExactLength matched_radius(const CylinderLattice& lattice);

struct SurfaceParams {
  int n = 5;
  ExactLength radius;
  int rows = 3;

  /// n punctures, three rows, matched radius.
  static SurfaceParams standard(int n);
};

enum class BuildMode {
  /// The verified path: n >= 5 and straight meridians clear every disc.
  strict,
  /// Any n >= 1 and any radius in (0, 1); counts are reported, not asserted.
  exploratory,
};

struct Cap {
  ExactLength circumference;
};

/// The capped cylinder S = A u H1 u H2. Chimneys carry axial indices 1..n;
/// the two boundary meridians of A sit at index positions 1/2 and n + 1/2.
/// Caps carry no interior geometry: every closed curve inside a cap is
/// contractible there.
class SphereModel {
 public:
  SphereModel(SurfaceParams params, BuildMode mode);

  [[nodiscard]] const SurfaceParams& params() const { return params_; }
  [[nodiscard]] BuildMode mode() const { return mode_; }
  [[nodiscard]] int n() const { return params_.n; }
  [[nodiscard]] const ExactLength& radius() const { return params_.radius; }
  [[nodiscard]] const CylinderLattice& lattice() const { return lattice_; }
  [[nodiscard]] const std::vector<Chimney>& chimneys() const { return chimneys_; }
  [[nodiscard]] const Rational& left_cut() const { return left_cut_; }
  [[nodiscard]] const Rational& right_cut() const { return right_cut_; }
  [[nodiscard]] const std::array<Cap, 2>& caps() const { return caps_; }

  [[nodiscard]] ExactLength circumference() const { return lattice_.circumference(); }
  [[nodiscard]] ExactLength half_spacing() const { return lattice_.half_spacing(); }
  /// Axial coordinate of an index-unit position (chimney s sits at s).
  [[nodiscard]] ExactLength axial_at(const Rational& index_position) const;
  /// True iff the mid-gap meridians clear every disc (h >= r).
  [[nodiscard]] bool meridians_clear() const { return meridians_clear_; }
  [[nodiscard]] bool in_band(Chimney c) const { return c.axial_index >= 1 && c.axial_index <= n(); }

 private:
  SurfaceParams params_;
  BuildMode mode_;
  CylinderLattice lattice_;
  std::vector<Chimney> chimneys_;
  Rational left_cut_;
  Rational right_cut_;
  std::array<Cap, 2> caps_;
  bool meridians_clear_ = false;
};

/// Validates params and assembles the model. Throws std::invalid_argument on
/// n below the mode's minimum, r <= 0, overlapping discs (r >= 1), or, in
/// strict mode, r >= h (no straight meridian).
SphereModel build(const SurfaceParams& params, BuildMode mode = BuildMode::strict);

struct ConstantsReport {
  ExactLength meridian_length;  // m
  ExactLength radius;           // r
  ExactLength clearance;        // h
  ExactLength belt_length;      // 4 + 2 pi r
  bool belt_equals_meridian = false;
  bool radius_below_quarter = false;
  bool quarter_below_clearance = false;
};

ConstantsReport constants_report(const SurfaceParams& params);

enum class Obstruction {
  negative_radius,      // m_k <= 4: the meridian is shorter than any belt
  overlapping_discs,    // r_k >= 1: neighbouring chimneys collide
  clearance_failure,    // r_k > h_k: no straight meridian, meridians exceed m_k
  shorter_essential,    // some belt class is strictly shorter than m_k
};

std::string to_string(Obstruction obstruction);

struct RowFeasibility {
  int rows = 0;
  ExactLength meridian_length;  // m_k = sqrt(1 + 3 k^2)
  ExactLength radius;           // r_k = (m_k - 4) / (2 pi)
  ExactLength clearance;        // h_k = sqrt(3) / m_k
  bool feasible = false;
  std::vector<Obstruction> obstructions;
  /// Length of the shortest curve in a blocked gap class (rubber band), when
  /// the discs are disjoint but no straight meridian exists.
  std::optional<double> blocked_meridian_length;
};

/// Tests whether the construction works on a cylinder with k rows. Throws
/// std::invalid_argument for even or non-positive k.
RowFeasibility row_feasibility(int rows);

nlohmann::json to_json(const RowFeasibility& report);

nlohmann::json to_json(const SphereModel& model);
/// Inverse of to_json; rebuilds through build() so invariants are rechecked.
SphereModel model_from_json(const nlohmann::json& document);

inline constexpr int kModelSchemaVersion = 1;

}  // namespace systolic
