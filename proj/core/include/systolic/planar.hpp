#pragma once

#include <span>
#include <vector>

#include "systolic/exact_length.hpp"
#include "systolic/lattice.hpp"

// Exact planar predicates on lattice points. All tests run on integer
// coordinates; scaling the second axis by sqrt(3) preserves orientation.
namespace systolic::planar {

/// Counter-clockwise hull without collinear vertices. One point for a
/// singleton, two for a collinear set.
std::vector<LatticeVec> convex_hull(std::span<const LatticeVec> points);

/// Perimeter of a hull as returned by convex_hull (a segment counts twice).
ExactLength hull_perimeter(std::span<const LatticeVec> hull);

Rational squared_distance_to_segment(LatticeVec p, LatticeVec s0, LatticeVec s1);

/// Squared distance from a point to a hull polygon (zero inside).
Rational squared_distance_to_hull(LatticeVec p, std::span<const LatticeVec> hull);

/// Squared distance between two convex hulls (zero when they meet).
Rational squared_distance_between_hulls(std::span<const LatticeVec> first,
                                        std::span<const LatticeVec> second);

enum class SegmentRelation { disjoint, shared_endpoint, crossing };

/// Crossing means any common point other than a single shared endpoint
/// (including collinear overlap).
SegmentRelation classify_segments(LatticeVec p0, LatticeVec p1, LatticeVec q0, LatticeVec q1);

}  // namespace systolic::planar
