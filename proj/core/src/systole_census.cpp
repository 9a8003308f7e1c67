#include "systolic/systole_census.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace systolic {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Census census(const SphereModel& model) {
  const ExactLength cutoff = model.circumference();
  ShortClassEnumeration found = enumerate_short_classes(model, cutoff);

  Census result;
  result.n = model.n();
  result.counts.belts_adjacent = static_cast<int>(found.adjacent_pairs);

  // Systoles are the shortest essential classes; the enumeration is complete
  // up to the cutoff, which is at least the systole length.
  std::vector<GeodesicClass> systoles;
  for (GeodesicClass& g : found.classes) {
    if (!g.shortest_length) continue;
    if (systoles.empty() || *g.shortest_length < result.systole_length) {
      systoles.clear();
      result.systole_length = *g.shortest_length;
    }
    if (*g.shortest_length == result.systole_length) systoles.push_back(std::move(g));
  }

  std::map<std::vector<int>, std::vector<std::size_t>> by_partition;
  for (std::size_t i = 0; i < systoles.size(); ++i) by_partition[systoles[i].partition].push_back(i);

  DisjointSets groups(systoles.size());
  for (const auto& [partition, members] : by_partition) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (groups.find(members[x]) != groups.find(members[y]) &&
            homotopic(model, systoles[members[x]], systoles[members[y]])) {
          groups.unite(members[x], members[y]);
        }
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> members_of;
  for (std::size_t i = 0; i < systoles.size(); ++i) members_of[groups.find(i)].push_back(i);
  for (const auto& [root, members] : members_of) {
    // Prefer a belt as representative.
    std::size_t representative = members.front();
    for (std::size_t i : members) {
      if (systoles[i].kind == ClassKind::belt) {
        representative = i;
        break;
      }
    }
    const bool has_belt = systoles[representative].kind == ClassKind::belt;
    for (std::size_t i : members) {
      if (systoles[i].kind == ClassKind::meridian && has_belt) ++result.counts.merged;
    }
    if (!has_belt) ++result.counts.meridians_remaining;
    result.classes.push_back(systoles[representative]);
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const GeodesicClass& a, const GeodesicClass& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.partition < b.partition;
            });
  result.counts.total = static_cast<int>(result.classes.size());
  return result;
}

int adjacency_edge_count(const SphereModel& model) {
  int count = 0;
  for (const Chimney& c : model.chimneys()) {
    for (const Chimney& q : model.lattice().neighbors_at_distance_two(c)) {
      if (q.axial_index > c.axial_index && model.in_band(q)) ++count;
    }
  }
  return count;
}

MeridianExclusion meridian_exclusion_report(const SphereModel& model) {
  MeridianExclusion report;
  report.asserted = model.n() >= 5;
  const CylinderLattice& lattice = model.lattice();
  for (int gap = 0; gap <= model.n(); ++gap) {
    const GeodesicClass meridian = classify(model, MeridianClass{gap});
    if (meridian.kind == ClassKind::contractible) {
      ++report.contractible;
      continue;
    }
    if (meridian.kind == ClassKind::inessential) {
      ++report.inessential;
      continue;
    }
    bool merged = false;
    if (meridian.partition.size() == 2) {
      const Chimney first{meridian.partition[0]};
      const Chimney second{meridian.partition[1]};
      if (lattice.squared_distance(first, second) == 4) {
        const LatticeVec origin = lattice.canonical_lift(first);
        const BeltClass pair{{origin, origin + lattice.shortest_displacement(first, second)}};
        merged = homotopic(model, classify(model, pair), meridian);
      }
    }
    ++(merged ? report.merged : report.counted);
  }
  return report;
}

nlohmann::json to_json(const Census& census) {
  nlohmann::json classes = nlohmann::json::array();
  for (const GeodesicClass& g : census.classes) classes.push_back(to_json(g));
  return {
      {"n", census.n},
      {"kissing", census.counts.total},
      {"systole_length", census.classes.empty() ? nlohmann::json(nullptr)
                                                : nlohmann::json(census.systole_length.to_string())},
      {"counts",
       {{"belts_adjacent", census.counts.belts_adjacent},
        {"meridians_remaining", census.counts.meridians_remaining},
        {"merged", census.counts.merged},
        {"total", census.counts.total}}},
      {"classes", classes},
  };
}

}  // namespace systolic
