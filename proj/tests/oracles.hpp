#pragma once

// Independent reference computations used to check the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "systolic/lattice.hpp"

namespace oracle {

// Minimum of |lift(q) - lift(p) + t w|^2 over |t| <= 400, lifts taken at a = 0.
inline std::int64_t squared_distance(std::int64_t s, std::int64_t t_index, int rows) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::int64_t db = -2 * (t_index - s);
  for (std::int64_t t = -400; t <= 400; ++t) {
    const std::int64_t a = t;
    const std::int64_t b = db + t * rows;
    best = std::min(best, a * a + 3 * b * b);
  }
  return best;
}

struct Point {
  double x, y;
};

inline double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double hull_perimeter(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double perimeter = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i];
    const Point b = hull[(i + 1) % hull.size()];
    perimeter += std::hypot(b.x - a.x, b.y - a.y);
  }
  return perimeter;
}

// Perimeter of the hull of the union of discs, from boundary samples.
inline double sampled_belt_length(const std::vector<systolic::LatticeVec>& centres, double r,
                                  int samples = 20000) {
  std::vector<Point> pts;
  const double tau = 2.0 * std::acos(-1.0);
  for (const auto& c : centres) {
    const double cx = static_cast<double>(c.a);
    const double cy = static_cast<double>(c.b) * std::sqrt(3.0);
    for (int i = 0; i < samples; ++i) {
      const double angle = tau * i / samples;
      pts.push_back({cx + r * std::cos(angle), cy + r * std::sin(angle)});
    }
  }
  return hull_perimeter(std::move(pts));
}

// Plain backtracking over bipartitions with both sides >= 3, each recorded by
// the side avoiding puncture n.
inline int laminar_max(int n) {
  std::vector<std::uint32_t> sides;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    const int size = std::popcount(mask);
    if (size >= 3 && size <= n - 3) sides.push_back(mask);
  }
  const auto compatible = [](std::uint32_t x, std::uint32_t y) {
    return (x & y) == 0 || (x & ~y) == 0 || (y & ~x) == 0;
  };
  int best = 0;
  std::vector<std::uint32_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t i = from; i < sides.size(); ++i) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) { return compatible(c, sides[i]); })) {
        chosen.push_back(sides[i]);
        extend(i + 1);
        chosen.pop_back();
      }
    }
  };
  extend(0);
  return best;
}

}  // namespace oracle
