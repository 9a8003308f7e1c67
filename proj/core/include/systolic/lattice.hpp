#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "systolic/exact_length.hpp"

namespace systolic {

/// Point a*e1 + b*sqrt(3)*e2 of the triangular lattice spanned by
/// (2, 0) and (1, sqrt(3)). Membership requires a and b of equal parity.
struct LatticeVec {
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// Throws std::invalid_argument when a and b have different parity.
  static LatticeVec checked(std::int64_t a, std::int64_t b);

  [[nodiscard]] bool in_lattice() const { return ((a - b) % 2) == 0; }
  [[nodiscard]] std::int64_t squared_length() const { return a * a + 3 * b * b; }

  friend LatticeVec operator+(LatticeVec p, LatticeVec q) { return {p.a + q.a, p.b + q.b}; }
  friend LatticeVec operator-(LatticeVec p, LatticeVec q) { return {p.a - q.a, p.b - q.b}; }
  friend LatticeVec operator-(LatticeVec p) { return {-p.a, -p.b}; }
  friend LatticeVec operator*(std::int64_t t, LatticeVec p) { return {t * p.a, t * p.b}; }
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

/// Euclidean dot product of the points represented by p and q.
inline std::int64_t dot(LatticeVec p, LatticeVec q) { return p.a * q.a + 3 * p.b * q.b; }
/// Cross product divided by sqrt(3); has the sign of the true cross product.
inline std::int64_t cross_over_sqrt3(LatticeVec p, LatticeVec q) { return p.a * q.b - p.b * q.a; }

/// A cusp of the quotient cylinder, identified by its axial index.
struct Chimney {
  std::int64_t axial_index = 0;

  friend auto operator<=>(const Chimney&, const Chimney&) = default;
};

/// Cartesian coordinates of a lattice point.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};
PlanePoint to_plane(LatticeVec p);

/// The lattice modulo the translation by period() = (1, rows), i.e. the
/// vector e1 + rows*sqrt(3)*e2. For rows = 3 this is a cylinder of
/// circumference sqrt(28) carrying three rows of chimneys.
///
/// The functional s(a, b) = (rows*a - b) / 2 vanishes exactly on multiples of
/// the period, so it labels orbits bijectively; it is the axial index.
class CylinderLattice {
 public:
  /// rows must be odd and positive; even counts are not lattice translations.
  explicit CylinderLattice(int rows = 3);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] LatticeVec period() const { return {1, rows_}; }
  /// |period|^2 = 1 + 3 rows^2 (28 for three rows).
  [[nodiscard]] std::int64_t period_squared_length() const { return 1 + 3LL * rows_ * rows_; }
  [[nodiscard]] ExactLength circumference() const;
  /// Half the axial spacing of consecutive chimneys: sqrt(3) / circumference.
  [[nodiscard]] ExactLength half_spacing() const;

  [[nodiscard]] std::int64_t axial_index(LatticeVec p) const;
  [[nodiscard]] Chimney chimney_of(LatticeVec p) const { return Chimney{axial_index(p)}; }
  /// Lift with the smallest |a| (ties: smaller b). With odd rows this is (0, -2s).
  [[nodiscard]] LatticeVec canonical_lift(Chimney c) const;
  /// Axial coordinate of a chimney, s * 2h.
  [[nodiscard]] ExactLength axial_coordinate(Chimney c) const;

  /// Shortest vector lift(q) - lift(p) + t*period over integer t.
  [[nodiscard]] LatticeVec shortest_displacement(Chimney p, Chimney q) const;
  [[nodiscard]] std::int64_t squared_distance(Chimney p, Chimney q) const;
  /// Chimneys at cylinder distance exactly two (nearest neighbours).
  [[nodiscard]] std::vector<Chimney> neighbors_at_distance_two(Chimney p) const;

  /// Chart coordinates: x along the axis, y around the cylinder in [0, L).
  [[nodiscard]] PlanePoint chart(LatticeVec p) const;
  /// Chart coordinates without reducing y modulo the circumference.
  [[nodiscard]] PlanePoint chart_unwrapped(LatticeVec p) const;

 private:
  int rows_;
};

/// Sorts by axial index and removes duplicates.
std::vector<Chimney> axial_order(std::span<const Chimney> chimneys);

}  // namespace systolic
