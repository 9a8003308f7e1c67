#include "systolic/planar.hpp"

#include <algorithm>
#include <stdexcept>

namespace systolic::planar {
namespace {

int orientation(LatticeVec o, LatticeVec p, LatticeVec q) {
  const std::int64_t c = cross_over_sqrt3(p - o, q - o);
  return (c > 0) - (c < 0);
}

bool on_segment(LatticeVec p, LatticeVec s0, LatticeVec s1) {
  return orientation(s0, s1, p) == 0 && std::min(s0.a, s1.a) <= p.a && p.a <= std::max(s0.a, s1.a) &&
         std::min(s0.b, s1.b) <= p.b && p.b <= std::max(s0.b, s1.b);
}

bool segments_meet(LatticeVec p0, LatticeVec p1, LatticeVec q0, LatticeVec q1) {
  const int o1 = orientation(p0, p1, q0);
  const int o2 = orientation(p0, p1, q1);
  const int o3 = orientation(q0, q1, p0);
  const int o4 = orientation(q0, q1, p1);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  return on_segment(q0, p0, p1) || on_segment(q1, p0, p1) || on_segment(p0, q0, q1) ||
         on_segment(p1, q0, q1);
}

bool inside_convex(LatticeVec p, std::span<const LatticeVec> hull) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticeVec> convex_hull(std::span<const LatticeVec> points) {
  std::vector<LatticeVec> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() <= 2) return sorted;

  // Andrew's monotone chain, dropping collinear points.
  std::vector<LatticeVec> hull(2 * sorted.size());
  std::size_t k = 0;
  for (const LatticeVec& p : sorted) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], sorted[i]) <= 0) --k;
    hull[k++] = sorted[i];
  }
  hull.resize(k - 1);
  return hull;
}

ExactLength hull_perimeter(std::span<const LatticeVec> hull) {
  ExactLength perimeter;
  if (hull.size() < 2) return perimeter;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const LatticeVec edge = hull[(i + 1) % hull.size()] - hull[i];
    perimeter += ExactLength::sqrt_of(Rational(edge.squared_length()));
  }
  return perimeter;
}

Rational squared_distance_to_segment(LatticeVec p, LatticeVec s0, LatticeVec s1) {
  const LatticeVec d = p - s0;
  const LatticeVec e = s1 - s0;
  const std::int64_t ee = e.squared_length();
  if (ee == 0) return Rational(d.squared_length());
  const std::int64_t de = dot(d, e);
  if (de <= 0) return Rational(d.squared_length());
  if (de >= ee) return Rational((p - s1).squared_length());
  Rational result(d.squared_length());
  result -= Rational(de) * Rational(de) / Rational(ee);
  return result;
}

Rational squared_distance_to_hull(LatticeVec p, std::span<const LatticeVec> hull) {
  if (hull.empty()) throw std::invalid_argument("empty hull");
  if (inside_convex(p, hull)) return Rational(0);
  if (hull.size() == 1) return Rational((p - hull[0]).squared_length());
  Rational best = squared_distance_to_segment(p, hull[0], hull[1]);
  for (std::size_t i = 1; i < hull.size(); ++i) {
    best = std::min(best, squared_distance_to_segment(p, hull[i], hull[(i + 1) % hull.size()]));
  }
  return best;
}

Rational squared_distance_between_hulls(std::span<const LatticeVec> first,
                                        std::span<const LatticeVec> second) {
  if (first.empty() || second.empty()) throw std::invalid_argument("empty hull");
  // Two convex polygons meet iff an edge pair meets or one contains a vertex of the other.
  const auto edges = [](std::span<const LatticeVec> hull) {
    std::vector<std::pair<LatticeVec, LatticeVec>> out;
    if (hull.size() == 1) out.emplace_back(hull[0], hull[0]);
    for (std::size_t i = 0; hull.size() > 1 && i < hull.size(); ++i) {
      out.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    }
    return out;
  };
  for (const auto& [p0, p1] : edges(first)) {
    for (const auto& [q0, q1] : edges(second)) {
      if (segments_meet(p0, p1, q0, q1)) return Rational(0);
    }
  }
  if (inside_convex(first[0], second) || inside_convex(second[0], first)) return Rational(0);
  Rational best = squared_distance_to_hull(first[0], second);
  for (const LatticeVec& p : first) best = std::min(best, squared_distance_to_hull(p, second));
  for (const LatticeVec& q : second) best = std::min(best, squared_distance_to_hull(q, first));
  return best;
}

SegmentRelation classify_segments(LatticeVec p0, LatticeVec p1, LatticeVec q0, LatticeVec q1) {
  if (!segments_meet(p0, p1, q0, q1)) return SegmentRelation::disjoint;
  const bool shares = p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1;
  if (shares) {
    // A shared endpoint is harmless unless the segments also overlap collinearly.
    const LatticeVec common = (p0 == q0 || p0 == q1) ? p0 : p1;
    const LatticeVec p_other = common == p0 ? p1 : p0;
    const LatticeVec q_other = common == q0 ? q1 : q0;
    const bool collinear_overlap = orientation(common, p_other, q_other) == 0 &&
                                   dot(p_other - common, q_other - common) > 0;
    return collinear_overlap ? SegmentRelation::crossing : SegmentRelation::shared_endpoint;
  }
  return SegmentRelation::crossing;
}

}  // namespace systolic::planar
