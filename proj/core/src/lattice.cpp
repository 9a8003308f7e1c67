#include "systolic/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace systolic {
namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

LatticeVec LatticeVec::checked(std::int64_t a, std::int64_t b) {
  LatticeVec v{a, b};
  if (!v.in_lattice()) {
    throw std::invalid_argument("(" + std::to_string(a) + ", " + std::to_string(b) +
                                ") is not a lattice point: coordinates differ in parity");
  }
  return v;
}

PlanePoint to_plane(LatticeVec p) {
  return {static_cast<double>(p.a), static_cast<double>(p.b) * std::sqrt(3.0)};
}

CylinderLattice::CylinderLattice(int rows) : rows_(rows) {
  if (rows < 1) throw std::invalid_argument("row count must be positive");
  if (rows % 2 == 0) {
    throw std::invalid_argument("row count " + std::to_string(rows) +
                                " is even: (1, rows) is not a lattice translation");
  }
}

ExactLength CylinderLattice::circumference() const {
  return ExactLength::sqrt_of(Rational(period_squared_length()));
}

ExactLength CylinderLattice::half_spacing() const {
  return ExactLength::sqrt_of(Rational(3, period_squared_length()));
}

std::int64_t CylinderLattice::axial_index(LatticeVec p) const {
  if (!p.in_lattice()) throw std::invalid_argument("axial_index: not a lattice point");
  return (rows_ * p.a - p.b) / 2;
}

LatticeVec CylinderLattice::canonical_lift(Chimney c) const { return {0, -2 * c.axial_index}; }

ExactLength CylinderLattice::axial_coordinate(Chimney c) const {
  return half_spacing() * Rational(2 * c.axial_index);
}

LatticeVec CylinderLattice::shortest_displacement(Chimney p, Chimney q) const {
  const LatticeVec raw = canonical_lift(q) - canonical_lift(p);
  const LatticeVec w = period();
  const std::int64_t ww = period_squared_length();
  // |raw + t w|^2 is a convex quadratic in t with real minimiser -dot(raw, w)/|w|^2;
  // the integer minimum lies within one step of it.
  const std::int64_t centre = floor_div(-dot(raw, w), ww);
  LatticeVec best = raw + centre * w;
  for (std::int64_t t = centre - 2; t <= centre + 3; ++t) {
    const LatticeVec candidate = raw + t * w;
    if (candidate.squared_length() < best.squared_length()) best = candidate;
  }
  return best;
}

std::int64_t CylinderLattice::squared_distance(Chimney p, Chimney q) const {
  return shortest_displacement(p, q).squared_length();
}

std::vector<Chimney> CylinderLattice::neighbors_at_distance_two(Chimney p) const {
  static constexpr LatticeVec kUnitSteps[] = {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};
  std::vector<Chimney> result;
  for (const LatticeVec step : kUnitSteps) {
    const Chimney q{p.axial_index + axial_index(step)};
    if (q != p && squared_distance(p, q) == 4) result.push_back(q);
  }
  return axial_order(result);
}

PlanePoint CylinderLattice::chart_unwrapped(LatticeVec p) const {
  const double length = std::sqrt(static_cast<double>(period_squared_length()));
  const double x = std::sqrt(3.0) * static_cast<double>(rows_ * p.a - p.b) / length;
  const double y = static_cast<double>(p.a + 3 * rows_ * p.b) / length;
  return {x, y};
}

PlanePoint CylinderLattice::chart(LatticeVec p) const {
  const double length = std::sqrt(static_cast<double>(period_squared_length()));
  PlanePoint q = chart_unwrapped(p);
  q.y = std::fmod(q.y, length);
  if (q.y < 0) q.y += length;
  return q;
}

std::vector<Chimney> axial_order(std::span<const Chimney> chimneys) {
  std::vector<Chimney> sorted(chimneys.begin(), chimneys.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

}  // namespace systolic
