#include "systolic/geodesic_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "systolic/planar.hpp"

namespace systolic {
namespace {

constexpr std::size_t kMaxBeltNeighbours = 20;

// Compares an exact squared distance against (2r)^2 using a cached enclosure
// and falling back to exact arithmetic near the boundary.
class DiscGapTest {
 public:
  explicit DiscGapTest(const ExactLength& radius)
      : threshold_(ExactLength(4) * radius * radius), bounds_(threshold_.enclose()) {}

  // True iff sqrt(squared) > 2r.
  [[nodiscard]] bool clears(const Rational& squared) const {
    const double value = squared.get_d();
    if (value > bounds_.upper * (1.0 + 1e-12) + 1e-300) return true;
    if (value < bounds_.lower * (1.0 - 1e-12)) return false;
    return ExactLength(squared) > threshold_;
  }

 private:
  ExactLength threshold_;
  Enclosure bounds_;
};

std::vector<LatticeVec> translate(std::span<const LatticeVec> points, LatticeVec by) {
  std::vector<LatticeVec> out;
  out.reserve(points.size());
  for (const LatticeVec& p : points) out.push_back(p + by);
  return out;
}

// Period shift t minimising the distance between the two anchor points.
std::int64_t nearest_shift(const CylinderLattice& lattice, LatticeVec from, LatticeVec to) {
  const LatticeVec d = to - from;
  const double t = -static_cast<double>(dot(d, lattice.period())) /
                   static_cast<double>(lattice.period_squared_length());
  return static_cast<std::int64_t>(std::llround(t));
}

// True iff the inflated hull meets no other band disc and does not overlap
// its own period translates.
bool hull_realised(const SphereModel& model, std::span<const LatticeVec> lifts,
                   std::span<const LatticeVec> hull, const DiscGapTest& gap) {
  const CylinderLattice& lattice = model.lattice();
  std::int64_t amin = hull[0].a, amax = hull[0].a, bmin = hull[0].b, bmax = hull[0].b;
  for (const LatticeVec& p : hull) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  // Discs closer than 2r < 2 to the hull lie inside this window.
  for (std::int64_t a = amin - 3; a <= amax + 3; ++a) {
    for (std::int64_t b = bmin - 2; b <= bmax + 2; ++b) {
      const LatticeVec q{a, b};
      if (!q.in_lattice()) continue;
      if (std::find(lifts.begin(), lifts.end(), q) != lifts.end()) continue;
      if (!model.in_band(lattice.chimney_of(q))) continue;
      if (!gap.clears(planar::squared_distance_to_hull(q, hull))) return false;
    }
  }
  for (std::int64_t t = 1; t <= 2; ++t) {
    const auto shifted = translate(hull, t * lattice.period());
    if (!gap.clears(planar::squared_distance_between_hulls(hull, shifted))) return false;
  }
  return true;
}

std::vector<double> exterior_angles(std::span<const LatticeVec> hull) {
  if (hull.size() == 1) return {2.0 * std::numbers::pi};
  if (hull.size() == 2) return {std::numbers::pi, std::numbers::pi};
  std::vector<double> angles;
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const PlanePoint a = to_plane(hull[(i + k - 1) % k]);
    const PlanePoint b = to_plane(hull[i]);
    const PlanePoint c = to_plane(hull[(i + 1) % k]);
    const double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - b.x, vy = c.y - b.y;
    angles.push_back(std::atan2(ux * vy - uy * vx, ux * vx + uy * vy));
  }
  return angles;
}

GeodesicClass make_class(std::vector<int> side, int n) {
  GeodesicClass g;
  const std::size_t inside = side.size();
  const std::size_t outside = static_cast<std::size_t>(n) - inside;
  g.partition = canonical_partition(std::move(side), n);
  if (inside == 0 || outside == 0) {
    g.kind = ClassKind::contractible;
  } else if (inside == 1 || outside == 1) {
    g.kind = ClassKind::inessential;
  } else {
    g.kind = ClassKind::belt;
  }
  return g;
}

bool same_lift_set(const CylinderLattice& lattice, std::vector<LatticeVec> first,
                   std::vector<LatticeVec> second) {
  if (first.size() != second.size() || first.empty()) return false;
  std::sort(first.begin(), first.end());
  const std::int64_t t = nearest_shift(lattice, first.front(), second.front());
  for (std::int64_t shift = t - 2; shift <= t + 2; ++shift) {
    auto moved = translate(second, shift * lattice.period());
    std::sort(moved.begin(), moved.end());
    if (moved == first) return true;
  }
  return false;
}

}  // namespace

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::belt: return "belt";
    case ClassKind::meridian: return "meridian";
    case ClassKind::inessential: return "inessential";
    case ClassKind::contractible: return "contractible";
  }
  return "unknown";
}

std::vector<int> canonical_partition(std::vector<int> side, int n) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  std::vector<int> complement;
  for (int i = 1, j = 0; i <= n; ++i) {
    if (j < static_cast<int>(side.size()) && side[static_cast<std::size_t>(j)] == i) {
      ++j;
    } else {
      complement.push_back(i);
    }
  }
  if (complement.size() < side.size() || (complement.size() == side.size() && complement < side)) {
    return complement;
  }
  return side;
}

ExactLength belt_length(std::span<const LatticeVec> enclosed, const ExactLength& radius) {
  if (enclosed.empty()) throw std::invalid_argument("belt_length: empty chimney set");
  const auto hull = planar::convex_hull(enclosed);
  return planar::hull_perimeter(hull) + ExactLength::pi(2) * radius;
}

std::vector<int> enclosed_indices(const SphereModel& model, const BeltClass& belt) {
  std::vector<int> indices;
  for (const LatticeVec& p : belt.enclosed) {
    const Chimney c = model.lattice().chimney_of(p);
    if (!model.in_band(c)) {
      throw std::invalid_argument("belt encloses chimney " + std::to_string(c.axial_index) +
                                  " outside the band 1.." + std::to_string(model.n()));
    }
    indices.push_back(static_cast<int>(c.axial_index));
  }
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("belt encloses two lifts of the same chimney");
  }
  return sorted;
}

MeridianLength meridian_shortest(const SphereModel& model, int gap,
                                 const RubberBandOptions& options) {
  if (gap < 0 || gap > model.n()) throw std::invalid_argument("gap index out of range");
  MeridianLength result;
  const ExactLength circumference = model.circumference();
  // Outside the band the line can slide away from the last disc.
  if (gap == 0 || gap == model.n() || model.meridians_clear()) {
    result.exact = circumference;
    result.numeric = circumference.to_double();
    return result;
  }
  const CylinderLattice& lattice = model.lattice();
  const double radius = model.radius().to_double();
  const double start_x = model.axial_at(Rational(2 * gap + 1, 2)).to_double();
  std::vector<ObstacleDisc> discs;
  for (const Chimney& c : model.chimneys()) {
    const PlanePoint p = lattice.chart(lattice.canonical_lift(c));
    if (std::abs(p.x - start_x) > 4.0 + 2.0 * radius) continue;
    discs.push_back({p, c.axial_index <= gap});
  }
  result.straight = false;
  result.band = shorten_meridian(discs, circumference.to_double(), radius, start_x, options);
  result.numeric = result.band->taut_length;
  return result;
}

GeodesicClass classify(const SphereModel& model, const BeltClass& belt) {
  if (belt.enclosed.empty()) throw std::invalid_argument("belt encloses no chimney");
  std::vector<int> side = enclosed_indices(model, belt);
  GeodesicClass g = make_class(side, model.n());
  const auto hull = planar::convex_hull(belt.enclosed);
  if (!hull_realised(model, belt.enclosed, hull, DiscGapTest(model.radius()))) {
    throw std::invalid_argument("belt is not realised by the convex hull of its discs");
  }
  g.shortest_length = planar::hull_perimeter(hull) + ExactLength::pi(2) * model.radius();
  g.numeric_length = g.shortest_length->to_double();
  std::vector<LatticeVec> enclosed = belt.enclosed;
  std::sort(enclosed.begin(), enclosed.end());
  g.certificate = BeltCertificate{std::move(enclosed), hull, exterior_angles(hull)};
  return g;
}

GeodesicClass classify(const SphereModel& model, const MeridianClass& meridian,
                       const RubberBandOptions& options) {
  if (meridian.gap < 0 || meridian.gap > model.n()) {
    throw std::invalid_argument("gap index out of range");
  }
  std::vector<int> left;
  for (int i = 1; i <= meridian.gap; ++i) left.push_back(i);
  GeodesicClass g = make_class(left, model.n());
  if (g.kind == ClassKind::belt) g.kind = ClassKind::meridian;
  MeridianCertificate certificate{meridian.gap, Rational(2 * meridian.gap + 1, 2), true, {}};
  if (g.kind == ClassKind::meridian) {
    MeridianLength length = meridian_shortest(model, meridian.gap, options);
    certificate.straight = length.straight;
    g.shortest_length = length.exact;
    g.numeric_length = length.numeric;
    if (length.band) certificate.curve = length.band->curve;
  } else {
    // Boundary-adjacent gaps always admit a straight representative.
    g.shortest_length = model.circumference();
    g.numeric_length = g.shortest_length->to_double();
  }
  g.certificate = std::move(certificate);
  return g;
}

bool homotopic(const SphereModel& model, const GeodesicClass& first, const GeodesicClass& second) {
  if (first.partition != second.partition) return false;
  const CylinderLattice& lattice = model.lattice();
  const auto* belt1 = std::get_if<BeltCertificate>(&first.certificate);
  const auto* belt2 = std::get_if<BeltCertificate>(&second.certificate);
  const auto* mer1 = std::get_if<MeridianCertificate>(&first.certificate);
  const auto* mer2 = std::get_if<MeridianCertificate>(&second.certificate);

  if (mer1 && mer2) return mer1->gap == mer2->gap;

  const auto indices_of = [&](const BeltCertificate& belt) {
    std::vector<int> out;
    for (const LatticeVec& p : belt.enclosed) out.push_back(static_cast<int>(lattice.axial_index(p)));
    std::sort(out.begin(), out.end());
    return out;
  };

  if (belt1 && belt2) {
    if (same_lift_set(lattice, belt1->enclosed, belt2->enclosed)) return true;
    // Complementary sides: disjoint discs whose complement is an annulus
    // holding no cusp.
    std::vector<int> all1 = indices_of(*belt1);
    std::vector<int> all2 = indices_of(*belt2);
    std::vector<int> common;
    std::set_intersection(all1.begin(), all1.end(), all2.begin(), all2.end(),
                          std::back_inserter(common));
    if (!common.empty()) return false;
    if (all1.size() + all2.size() != static_cast<std::size_t>(model.n())) return false;
    const DiscGapTest gap(model.radius());
    const std::int64_t t = nearest_shift(lattice, belt1->hull.front(), belt2->hull.front());
    for (std::int64_t shift = t - 2; shift <= t + 2; ++shift) {
      const auto moved = translate(belt2->hull, shift * lattice.period());
      if (!gap.clears(planar::squared_distance_between_hulls(belt1->hull, moved))) return false;
    }
    return true;
  }

  const BeltCertificate* belt = belt1 ? belt1 : belt2;
  const MeridianCertificate* meridian = mer1 ? mer1 : mer2;
  if (!belt || !meridian || !meridian->straight) return false;
  const std::vector<int> enclosed = indices_of(*belt);
  const ExactLength position = model.axial_at(meridian->position);
  const ExactLength lowest = model.axial_at(Rational(enclosed.front())) - model.radius();
  const ExactLength highest = model.axial_at(Rational(enclosed.back())) + model.radius();
  std::vector<int> side;
  if (position > highest) {
    for (int i = 1; i <= meridian->gap; ++i) side.push_back(i);
  } else if (position < lowest) {
    for (int i = meridian->gap + 1; i <= model.n(); ++i) side.push_back(i);
  } else {
    return false;
  }
  return side == enclosed;
}

ShortClassEnumeration enumerate_short_classes(const SphereModel& model, const ExactLength& cutoff) {
  ShortClassEnumeration result;
  const ExactLength circumference = model.circumference();
  result.below_meridian_length = cutoff < circumference;
  result.winding_complete = cutoff <= circumference;

  const CylinderLattice& lattice = model.lattice();
  const ExactLength budget = cutoff - ExactLength::pi(2) * model.radius();
  if (budget.sign() >= 0) {
    // A hull of perimeter P has diameter at most P / 2.
    const ExactLength half = budget / Rational(2);
    const ExactLength diameter_squared = half * half;
    auto max_sq = static_cast<std::int64_t>(std::floor(diameter_squared.to_double()));
    while (ExactLength(max_sq + 1) <= diameter_squared) ++max_sq;
    while (max_sq > 0 && ExactLength(max_sq) > diameter_squared) --max_sq;

    const DiscGapTest gap(model.radius());
    const auto reach_a = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_sq))) + 1;
    const auto reach_b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_sq) / 3.0)) + 1;

    for (const Chimney& anchor : model.chimneys()) {
      const LatticeVec origin = lattice.canonical_lift(anchor);
      std::vector<LatticeVec> nearby;
      for (std::int64_t da = -reach_a; da <= reach_a; ++da) {
        for (std::int64_t db = -reach_b; db <= reach_b; ++db) {
          const LatticeVec step{da, db};
          if (!step.in_lattice() || step.squared_length() == 0 || step.squared_length() > max_sq) {
            continue;
          }
          const Chimney c = lattice.chimney_of(origin + step);
          if (c.axial_index > anchor.axial_index && model.in_band(c)) nearby.push_back(origin + step);
        }
      }
      if (nearby.size() > kMaxBeltNeighbours) {
        throw std::runtime_error("enumerate_short_classes: cutoff too large for subset enumeration");
      }
      for (std::uint32_t mask = 1; mask < (1u << nearby.size()); ++mask) {
        std::vector<LatticeVec> chosen{origin};
        for (std::size_t i = 0; i < nearby.size(); ++i) {
          if (mask & (1u << i)) chosen.push_back(nearby[i]);
        }
        bool admissible = true;
        std::set<std::int64_t> seen;
        for (std::size_t i = 0; i < chosen.size() && admissible; ++i) {
          admissible = seen.insert(lattice.axial_index(chosen[i])).second;
          for (std::size_t j = 0; j < i && admissible; ++j) {
            admissible = (chosen[i] - chosen[j]).squared_length() <= max_sq;
          }
        }
        if (!admissible) continue;
        ++result.belt_candidates;
        const auto hull = planar::convex_hull(chosen);
        if (planar::hull_perimeter(hull) > budget) continue;
        if (!hull_realised(model, chosen, hull, gap)) {
          throw std::runtime_error(
              "enumerate_short_classes: a candidate within budget is not realised by its hull");
        }
        if (chosen.size() == 2 && (chosen[1] - chosen[0]).squared_length() == 4) {
          ++result.adjacent_pairs;
        }
        GeodesicClass g = classify(model, BeltClass{chosen});
        if (g.essential()) result.classes.push_back(std::move(g));
      }
    }
  }

  for (int gap_index = 0; gap_index <= model.n(); ++gap_index) {
    // Blocked gaps are strictly longer than the circumference.
    if (!model.meridians_clear() && cutoff <= circumference && gap_index > 0 &&
        gap_index < model.n()) {
      continue;
    }
    GeodesicClass g = classify(model, MeridianClass{gap_index});
    if (!g.essential()) continue;
    const bool short_enough = g.shortest_length ? *g.shortest_length <= cutoff
                                                : g.numeric_length <= cutoff.to_double();
    if (short_enough) result.classes.push_back(std::move(g));
  }
  return result;
}

nlohmann::json to_json(const GeodesicClass& geodesic) {
  nlohmann::json certificate;
  if (const auto* belt = std::get_if<BeltCertificate>(&geodesic.certificate)) {
    nlohmann::json hull = nlohmann::json::array();
    for (const LatticeVec& p : belt->hull) hull.push_back({p.a, p.b});
    nlohmann::json enclosed = nlohmann::json::array();
    for (const LatticeVec& p : belt->enclosed) enclosed.push_back({p.a, p.b});
    certificate = {{"type", "belt"},
                   {"enclosed", enclosed},
                   {"hull", hull},
                   {"arc_angles", belt->arc_angles}};
  } else {
    const auto& meridian = std::get<MeridianCertificate>(geodesic.certificate);
    certificate = {{"type", "meridian"},
                   {"gap", meridian.gap},
                   {"position", meridian.position.get_str()},
                   {"straight", meridian.straight}};
  }
  return {
      {"kind", to_string(geodesic.kind)},
      {"partition", geodesic.partition},
      {"length", geodesic.shortest_length ? nlohmann::json(geodesic.shortest_length->to_string())
                                          : nlohmann::json(nullptr)},
      {"certificate", certificate},
  };
}

}  // namespace systolic
