#pragma once

#include <span>
#include <vector>

#include "systolic/lattice.hpp"

namespace systolic {

/// A disc obstacle in the cylinder chart (x along the axis, y around it).
/// on_left: the disc must stay on the left of a curve running in +y.
struct ObstacleDisc {
  PlanePoint centre;
  bool on_left = false;
};

struct RubberBandOptions {
  int min_vertices = 64;
  int max_sweeps = 60000;
  double tolerance = 1e-14;
  double radius_step = 0.01;
};

/// A disc touched by the taut curve: index into the obstacle list plus the
/// period copy (y shifted by copy * period).
struct Contact {
  std::size_t disc = 0;
  int copy = 0;

  friend bool operator==(const Contact&, const Contact&) = default;
};

struct RubberBandResult {
  std::vector<PlanePoint> curve;  // one period, vertices in +y order
  double polyline_length = 0.0;
  /// Length of the bitangent/arc curve through the contact sequence.
  double taut_length = 0.0;
  std::vector<Contact> contacts;
  /// Polyline length after each sweep of the fixed-radius phase.
  std::vector<double> history;
  int sweeps = 0;
  bool converged = false;
};

/// Shortest closed curve winding once around a cylinder of circumference
/// `period` that keeps every on_left disc to its left and every other disc to
/// its right. Starts from the straight line x = start_x (which must miss all
/// centres), grows the discs from a radius the line clears up to `radius`
/// while pushing the curve outward, then shortens by Gauss-Seidel midpoint
/// moves that are accepted only if they do not increase length.
RubberBandResult shorten_meridian(std::span<const ObstacleDisc> discs, double period, double radius,
                                  double start_x, const RubberBandOptions& options = {});

/// Closed-form length of the periodic geodesic that wraps the given contacts
/// in order: bitangent segments plus arcs of the turning angles. Contacts
/// whose turn would have the wrong sign are dropped first.
double tangent_arc_length(std::span<const ObstacleDisc> discs, std::vector<Contact> contacts,
                          double period, double radius);

}  // namespace systolic
