#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "systolic/systole_census.hpp"

namespace systolic {

/// A separating curve on the n-punctured sphere, recorded by the punctures
/// on its canonical (smaller) side.
class CurvePartition {
 public:
  /// Throws std::invalid_argument unless 2 <= |side| <= n - 2 with entries in 1..n.
  CurvePartition(std::vector<int> side, int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& side() const { return side_; }
  [[nodiscard]] std::uint64_t mask() const;  // requires n <= 64

  friend bool operator==(const CurvePartition&, const CurvePartition&) = default;

 private:
  std::vector<int> side_;
  int n_;
};

/// Disjoint separating curves induce nested-or-disjoint partitions: some
/// intersection of a side of p with a side of q is empty.
/// Throws std::invalid_argument on mismatched n.
bool laminar_compatible(const CurvePartition& p, const CurvePartition& q);

inline constexpr int kDefaultBruteForceLimit = 12;

struct LaminarSearch {
  int n = 0;
  std::optional<int> maximum;  // absent when n exceeds the brute-force limit
  std::vector<CurvePartition> witness;
  std::size_t nodes = 0;
};

/// Largest pairwise-compatible family of partitions with both sides >= 3,
/// by branch and bound with a greedy-colouring bound. Exhaustive for
/// 5 <= n <= limit.
LaminarSearch laminar_max(int n, int brute_force_limit = kDefaultBruteForceLimit);

/// Graph on punctures 0..n-1 with a rotation system: for each vertex, the
/// half-edges leaving it in counter-clockwise order. Half-edge 2e runs from
/// edges[e].first to edges[e].second, half-edge 2e+1 the other way.
struct ArcSystem {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
};

struct EulerReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  bool triangulated = false;
  int edge_bound = 0;  // 3(n - 2)
  bool attains_bound = false;
};

/// Traces faces of the rotation system and checks V - E + F = 2. Throws
/// std::invalid_argument for malformed or disconnected systems and for
/// non-spherical maps.
EulerReport euler_edge_bound(const ArcSystem& system);

struct Tightness {
  int n = 0;
  int pair_classes = 0;       // systoles bounding two cusps
  int other_classes = 0;      // systoles with at least three cusps on each side
  int pair_bound = 0;         // 3(n - 2)
  int other_bound = 0;        // n - 5
  int total_bound = 0;        // 4n - 11
  std::optional<int> laminar_maximum;
  bool arcs_non_crossing = false;
  bool others_laminar = false;
  EulerReport arc_map;
  bool attains = false;
};

/// Arc system of the two-cusp systoles: straight segments between adjacent
/// centres, embedded by angular order and checked exactly for crossings.
ArcSystem census_arc_system(const SphereModel& model, const Census& census);

Tightness construction_tightness(const SphereModel& model, const Census& census,
                                 int brute_force_limit = kDefaultBruteForceLimit);

nlohmann::json to_json(const Tightness& report);

}  // namespace systolic
