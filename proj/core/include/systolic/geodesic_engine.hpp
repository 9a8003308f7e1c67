#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "systolic/exact_length.hpp"
#include "systolic/lattice.hpp"
#include "systolic/rubber_band.hpp"
#include "systolic/surface_model.hpp"

namespace systolic {

/// Curves around a set of chimneys, given by lifts in the plane. Lifts must
/// carry distinct axial indices; the whole set is defined up to a common
/// period translation.
struct BeltClass {
  std::vector<LatticeVec> enclosed;
};

/// Curves winding once around the cylinder between chimneys gap and gap + 1.
struct MeridianClass {
  int gap = 0;
};

enum class ClassKind { belt, meridian, inessential, contractible };

std::string to_string(ClassKind kind);

struct BeltCertificate {
  std::vector<LatticeVec> enclosed; // lifts of the enclosed centres
  std::vector<LatticeVec> hull;     // counter-clockwise hull of the enclosed centres
  std::vector<double> arc_angles;   // exterior angle at each hull vertex (sums to 2 pi)
};

struct MeridianCertificate {
  int gap = 0;
  Rational position;   // index-unit axial position of the straight meridian (gap + 1/2)
  bool straight = true;
  std::vector<PlanePoint> curve;  // rubber-band polyline when not straight
};

using Certificate = std::variant<BeltCertificate, MeridianCertificate>;

struct GeodesicClass {
  ClassKind kind = ClassKind::contractible;
  /// Cusps on the canonical side: the smaller side, ties broken lexicographically.
  std::vector<int> partition;
  /// Exact length; absent only for rubber-band meridians in exploratory models.
  std::optional<ExactLength> shortest_length;
  double numeric_length = 0.0;
  Certificate certificate;

  [[nodiscard]] bool essential() const {
    return kind == ClassKind::belt || kind == ClassKind::meridian;
  }
};

/// Canonical side of the bipartition {side, complement} of {1..n}.
std::vector<int> canonical_partition(std::vector<int> side, int n);

/// Perimeter of the convex hull of the centres plus 2 pi r: the length of the
/// boundary of the convex hull of the union of the discs.
ExactLength belt_length(std::span<const LatticeVec> enclosed, const ExactLength& radius);

struct MeridianLength {
  bool straight = true;
  /// Equal to the circumference when straight.
  std::optional<ExactLength> exact;
  double numeric = 0.0;
  std::optional<RubberBandResult> band;
};

/// Shortest curve in the gap class. Straight (length = circumference) iff the
/// straight line through the gap clears every disc; otherwise the rubber band
/// gives the length, which is then strictly larger than the circumference.
MeridianLength meridian_shortest(const SphereModel& model, int gap,
                                 const RubberBandOptions& options = {});

GeodesicClass classify(const SphereModel& model, const BeltClass& belt);
GeodesicClass classify(const SphereModel& model, const MeridianClass& meridian,
                       const RubberBandOptions& options = {});

/// Sound test for free homotopy on the sphere: equal partitions and disjoint
/// representatives cobounding an unpunctured annulus (or identical classes).
bool homotopic(const SphereModel& model, const GeodesicClass& first, const GeodesicClass& second);

struct ShortClassEnumeration {
  std::vector<GeodesicClass> classes;
  /// cutoff < circumference: no winding class can qualify.
  bool below_meridian_length = false;
  /// Every class of length <= cutoff is listed. True when cutoff <= the
  /// circumference: once-winding curves other than straight meridians are
  /// strictly longer, and |k|-fold winding costs at least |k| times it.
  bool winding_complete = true;
  std::size_t belt_candidates = 0;
  /// Two-chimney candidates within budget at distance two, essential or not.
  std::size_t adjacent_pairs = 0;
};

/// All essential classes with shortest length <= cutoff. Belt candidates are
/// lattice sets whose diameter is at most half the hull-perimeter budget
/// cutoff - 2 pi r; every candidate within budget must be hull-realised
/// (no other disc touches the inflated hull), otherwise std::runtime_error.
ShortClassEnumeration enumerate_short_classes(const SphereModel& model, const ExactLength& cutoff);

/// Chimney indices enclosed by a belt (axial indices of its lifts).
std::vector<int> enclosed_indices(const SphereModel& model, const BeltClass& belt);

nlohmann::json to_json(const GeodesicClass& geodesic);

}  // namespace systolic
