#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "systolic/geodesic_engine.hpp"
#include "systolic/surface_model.hpp"

namespace systolic {

struct CensusCounts {
  /// Belts around pairs of adjacent chimneys found by the enumeration
  /// (counted before the essential filter; 3n - 6 for n >= 3).
  int belts_adjacent = 0;
  /// Essential meridian classes that did not merge into a belt class.
  int meridians_remaining = 0;
  /// Meridian classes homotopic to an already listed belt class.
  int merged = 0;
  int total = 0;
};

/// Systoles up to free homotopy.
struct Census {
  int n = 0;
  std::vector<GeodesicClass> classes;  // one representative per homotopy class
  ExactLength systole_length;
  CensusCounts counts;
};

/// Enumerates every essential class of length <= circumference and groups
/// them by homotopic(). Merged groups keep a belt representative. Classes are
/// ordered by kind, then partition.
Census census(const SphereModel& model);

/// Pairs i < j in 1..n at cylinder distance two.
int adjacency_edge_count(const SphereModel& model);

struct MeridianExclusion {
  int contractible = 0;  // gaps 0 and n
  int inessential = 0;   // gaps 1 and n - 1
  int merged = 0;        // gaps 2 and n - 2
  int counted = 0;       // the rest: n - 5
  /// False for n < 5, where the figures are reported but not asserted.
  bool asserted = true;
};

MeridianExclusion meridian_exclusion_report(const SphereModel& model);

nlohmann::json to_json(const Census& census);

}  // namespace systolic
