#include "systolic/upper_bound.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "systolic/planar.hpp"

namespace systolic {
namespace {

// Dense bitset over at most a few thousand vertices.
class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  [[nodiscard]] bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  Bits operator&(const Bits& other) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }
  template <typename F>
  void for_each(F&& visit) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        visit(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Maximum clique by branch and bound with greedy colouring (Tomita's MCQ).
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bits> adjacency) : adjacency_(std::move(adjacency)) {}

  std::vector<std::size_t> run(const Bits& candidates, std::size_t lower_bound) {
    best_size_ = lower_bound;
    best_.clear();
    current_.clear();
    expand(candidates);
    return best_;
  }
  [[nodiscard]] std::size_t nodes() const { return nodes_; }
  [[nodiscard]] std::size_t best_size() const { return best_size_; }

 private:
  void expand(Bits candidates) {
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_size_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      const Bits next = candidates & adjacency_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  void colour_sort(const Bits& candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    std::vector<std::size_t> uncoloured;
    candidates.for_each([&](std::size_t v) { uncoloured.push_back(v); });
    std::size_t k = 0;
    while (!uncoloured.empty()) {
      ++k;
      std::vector<std::size_t> rest;
      std::vector<std::size_t> klass;
      for (std::size_t v : uncoloured) {
        const bool clash = std::any_of(klass.begin(), klass.end(),
                                       [&](std::size_t u) { return adjacency_[u].test(v); });
        (clash ? rest : klass).push_back(v);
      }
      for (std::size_t v : klass) {
        order.push_back(v);
        colour.push_back(k);
      }
      uncoloured = std::move(rest);
    }
  }

  std::vector<Bits> adjacency_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t nodes_ = 0;
};

bool masks_laminar(std::uint64_t x, std::uint64_t y) {
  return (x & y) == 0 || (x & ~y) == 0 || (y & ~x) == 0;
}

std::vector<int> side_of_mask(std::uint64_t mask) {
  std::vector<int> side;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1u) side.push_back(i + 1);
  }
  return side;
}

int half_edge_origin(const ArcSystem& system, int half_edge) {
  const auto& [u, v] = system.edges[static_cast<std::size_t>(half_edge / 2)];
  return half_edge % 2 == 0 ? u : v;
}

// Counter-clockwise angular order of lattice directions, starting at angle 0.
bool angle_less(LatticeVec p, LatticeVec q) {
  const auto upper = [](LatticeVec v) { return v.b > 0 || (v.b == 0 && v.a > 0); };
  if (upper(p) != upper(q)) return upper(p);
  return cross_over_sqrt3(p, q) > 0;
}

}  // namespace

CurvePartition::CurvePartition(std::vector<int> side, int n) : n_(n) {
  for (int i : side) {
    if (i < 1 || i > n) throw std::invalid_argument("puncture index out of range");
  }
  side_ = canonical_partition(std::move(side), n);
  if (side_.size() < 2) {
    throw std::invalid_argument("partition is not essential: a side holds fewer than two cusps");
  }
}

std::uint64_t CurvePartition::mask() const {
  if (n_ > 64) throw std::invalid_argument("mask requires n <= 64");
  std::uint64_t mask = 0;
  for (int i : side_) mask |= std::uint64_t{1} << (i - 1);
  return mask;
}

bool laminar_compatible(const CurvePartition& p, const CurvePartition& q) {
  if (p.n() != q.n()) throw std::invalid_argument("partitions of different puncture sets");
  const auto& x = p.side();
  const auto& y = q.side();
  std::vector<int> meet;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(meet));
  if (meet.empty()) return true;                           // X and Y disjoint
  if (meet.size() == x.size() || meet.size() == y.size()) return true;  // nested
  return x.size() + y.size() - meet.size() == static_cast<std::size_t>(p.n());  // X u Y = all
}

LaminarSearch laminar_max(int n, int brute_force_limit) {
  LaminarSearch result;
  result.n = n;
  if (n < 1) throw std::invalid_argument("laminar_max: n must be positive");
  if (n > brute_force_limit || n > 20) return result;
  if (n < 6) {
    result.maximum = 0;
    return result;
  }
  // Each partition is recorded by its side avoiding puncture n; two such sides
  // are compatible iff nested or disjoint.
  const int ground = n - 1;
  std::vector<std::uint64_t> sides;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ground); ++mask) {
    const int size = std::popcount(mask);
    if (size >= 3 && size <= n - 3) sides.push_back(mask);
  }
  std::sort(sides.begin(), sides.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<Bits> adjacency(sides.size(), Bits(sides.size()));
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      if (masks_laminar(sides[i], sides[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  CliqueSearch search(adjacency);

  // Relabel so that a smallest member is {1..t}: then every other member has
  // size >= t and is compatible with it.
  std::size_t best = 0;
  std::vector<std::uint64_t> witness;
  for (int t = 3; t <= n - 3; ++t) {
    const std::uint64_t seed = (std::uint64_t{1} << t) - 1;
    const auto seed_index = static_cast<std::size_t>(
        std::find(sides.begin(), sides.end(), seed) - sides.begin());
    Bits candidates(sides.size());
    for (std::size_t j = 0; j < sides.size(); ++j) {
      if (j != seed_index && std::popcount(sides[j]) >= t && adjacency[seed_index].test(j)) {
        candidates.set(j);
      }
    }
    if (best == 0) best = 1, witness = {seed};
    if (candidates.none()) continue;
    const auto clique = search.run(candidates, best - 1);
    if (clique.size() + 1 > best) {
      best = clique.size() + 1;
      witness = {seed};
      for (std::size_t v : clique) witness.push_back(sides[v]);
    }
  }
  result.maximum = static_cast<int>(best);
  result.nodes = search.nodes();
  for (std::uint64_t mask : witness) result.witness.emplace_back(side_of_mask(mask), n);
  return result;
}

EulerReport euler_edge_bound(const ArcSystem& system) {
  const int v_count = system.vertices;
  const int e_count = static_cast<int>(system.edges.size());
  if (v_count < 1) throw std::invalid_argument("arc system without vertices");
  if (static_cast<int>(system.rotation.size()) != v_count) {
    throw std::invalid_argument("rotation system size does not match vertex count");
  }
  // position[h] = index of half-edge h in the rotation at its origin.
  std::vector<int> position(static_cast<std::size_t>(2 * e_count), -1);
  for (int e = 0; e < e_count; ++e) {
    const auto [u, v] = system.edges[static_cast<std::size_t>(e)];
    if (u < 0 || v < 0 || u >= v_count || v >= v_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not arcs between distinct punctures");
  }
  for (int vertex = 0; vertex < v_count; ++vertex) {
    const auto& around = system.rotation[static_cast<std::size_t>(vertex)];
    for (std::size_t k = 0; k < around.size(); ++k) {
      const int h = around[k];
      if (h < 0 || h >= 2 * e_count || half_edge_origin(system, h) != vertex ||
          position[static_cast<std::size_t>(h)] != -1) {
        throw std::invalid_argument("rotation system lists a half-edge at the wrong vertex or twice");
      }
      position[static_cast<std::size_t>(h)] = static_cast<int>(k);
    }
  }
  if (std::find(position.begin(), position.end(), -1) != position.end()) {
    throw std::invalid_argument("rotation system misses a half-edge");
  }
  // Connectivity.
  std::vector<int> parent(static_cast<std::size_t>(v_count));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& [u, v] : system.edges) parent[static_cast<std::size_t>(find(u))] = find(v);
  for (int vertex = 0; vertex < v_count; ++vertex) {
    if (find(vertex) != find(0)) throw std::invalid_argument("arc system is not connected");
  }

  // Face after half-edge h = u->v: the half-edge preceding the twin v->u in
  // the counter-clockwise rotation at v (the face on the left of h).
  std::vector<bool> seen(static_cast<std::size_t>(2 * e_count), false);
  int faces = e_count == 0 ? 1 : 0;
  bool triangulated = e_count > 0;
  for (int start = 0; start < 2 * e_count; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++faces;
    int length = 0;
    int h = start;
    do {
      seen[static_cast<std::size_t>(h)] = true;
      ++length;
      const int twin = h ^ 1;
      const int at = half_edge_origin(system, twin);
      const auto& around = system.rotation[static_cast<std::size_t>(at)];
      const int k = position[static_cast<std::size_t>(twin)];
      h = around[static_cast<std::size_t>((k + static_cast<int>(around.size()) - 1) %
                                          static_cast<int>(around.size()))];
    } while (h != start);
    if (length != 3) triangulated = false;
  }

  EulerReport report;
  report.vertices = v_count;
  report.edges = e_count;
  report.faces = faces;
  report.euler_characteristic = v_count - e_count + faces;
  if (report.euler_characteristic != 2) {
    throw std::invalid_argument("map is not spherical: V - E + F = " +
                                std::to_string(report.euler_characteristic));
  }
  report.triangulated = triangulated;
  report.edge_bound = 3 * (v_count - 2);
  report.attains_bound = e_count == report.edge_bound;
  return report;
}

ArcSystem census_arc_system(const SphereModel& model, const Census& census) {
  const CylinderLattice& lattice = model.lattice();
  ArcSystem system;
  system.vertices = model.n();
  system.rotation.assign(static_cast<std::size_t>(model.n()), {});
  std::vector<std::vector<std::pair<LatticeVec, int>>> outgoing(static_cast<std::size_t>(model.n()));
  for (const GeodesicClass& g : census.classes) {
    if (g.partition.size() != 2) continue;
    const int e = static_cast<int>(system.edges.size());
    const int u = g.partition[0] - 1;
    const int v = g.partition[1] - 1;
    system.edges.emplace_back(u, v);
    const LatticeVec d = lattice.shortest_displacement(Chimney{u + 1}, Chimney{v + 1});
    outgoing[static_cast<std::size_t>(u)].emplace_back(d, 2 * e);
    outgoing[static_cast<std::size_t>(v)].emplace_back(-d, 2 * e + 1);
  }
  for (std::size_t vertex = 0; vertex < outgoing.size(); ++vertex) {
    auto& around = outgoing[vertex];
    std::sort(around.begin(), around.end(),
              [](const auto& p, const auto& q) { return angle_less(p.first, q.first); });
    for (const auto& [direction, half_edge] : around) system.rotation[vertex].push_back(half_edge);
  }
  return system;
}

namespace {

bool arcs_non_crossing(const SphereModel& model, const ArcSystem& system) {
  const CylinderLattice& lattice = model.lattice();
  struct Segment {
    LatticeVec from, to;
  };
  std::vector<Segment> segments;
  for (const auto& [u, v] : system.edges) {
    const LatticeVec start = lattice.canonical_lift(Chimney{u + 1});
    segments.push_back({start, start + lattice.shortest_displacement(Chimney{u + 1}, Chimney{v + 1})});
  }
  const LatticeVec w = lattice.period();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const LatticeVec d = segments[j].from - segments[i].from;
      const auto centre = static_cast<std::int64_t>(std::llround(
          -static_cast<double>(dot(d, w)) / static_cast<double>(lattice.period_squared_length())));
      for (std::int64_t t = centre - 2; t <= centre + 2; ++t) {
        const LatticeVec shift = t * w;
        if (planar::classify_segments(segments[i].from, segments[i].to, segments[j].from + shift,
                                      segments[j].to + shift) == planar::SegmentRelation::crossing) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Tightness construction_tightness(const SphereModel& model, const Census& census,
                                 int brute_force_limit) {
  Tightness report;
  const int n = model.n();
  report.n = n;
  report.pair_bound = 3 * (n - 2);
  report.other_bound = n - 5;
  report.total_bound = 4 * n - 11;

  std::vector<CurvePartition> others;
  for (const GeodesicClass& g : census.classes) {
    if (g.partition.size() == 2) {
      ++report.pair_classes;
    } else {
      ++report.other_classes;
      others.emplace_back(g.partition, n);
    }
  }
  report.others_laminar = true;
  for (std::size_t i = 0; i < others.size() && report.others_laminar; ++i) {
    for (std::size_t j = i + 1; j < others.size() && report.others_laminar; ++j) {
      report.others_laminar = laminar_compatible(others[i], others[j]);
    }
  }

  const ArcSystem arcs = census_arc_system(model, census);
  report.arcs_non_crossing = arcs_non_crossing(model, arcs);
  report.arc_map = euler_edge_bound(arcs);
  if (n >= 5) report.laminar_maximum = laminar_max(n, brute_force_limit).maximum;

  report.attains = report.pair_classes == report.pair_bound &&
                   report.other_classes == report.other_bound &&
                   report.pair_classes + report.other_classes == report.total_bound &&
                   report.arcs_non_crossing && report.others_laminar &&
                   report.arc_map.attains_bound && report.arc_map.triangulated &&
                   (!report.laminar_maximum || *report.laminar_maximum == report.other_classes);
  return report;
}

nlohmann::json to_json(const Tightness& report) {
  return {
      {"n", report.n},
      {"laminar_max", report.laminar_maximum ? nlohmann::json(*report.laminar_maximum)
                                             : nlohmann::json(nullptr)},
      {"edge_bound", report.pair_bound},
      {"total_bound", report.total_bound},
      {"pair_classes", report.pair_classes},
      {"other_classes", report.other_classes},
      {"arcs_non_crossing", report.arcs_non_crossing},
      {"arc_map",
       {{"vertices", report.arc_map.vertices},
        {"edges", report.arc_map.edges},
        {"faces", report.arc_map.faces},
        {"triangulated", report.arc_map.triangulated}}},
      {"construction_attains", report.attains},
  };
}

}  // namespace systolic
