#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "systolic/exact_length.hpp"

namespace systolic {

/// Angles as rational multiples of pi; 0 marks an ideal vertex.
struct HyperbolicTriangle {
  std::array<Rational, 3> angles;
};

/// Gauss-Bonnet: pi minus the angle sum. Throws std::invalid_argument if an
/// angle lies outside [0, pi) or the angles sum to pi or more.
ExactLength triangle_area(const HyperbolicTriangle& triangle);

struct BlockCheck {
  ExactLength piece_area;        // triangle (0, pi/2, pi/3)
  ExactLength block_area;        // twelve pieces
  ExactLength corner_angle;      // two pi/3 angles meeting at a hexagon corner
  ExactLength exterior_turning;  // six exterior angles of the hexagon
  bool area_is_two_pi = false;
  bool corner_is_two_thirds_pi = false;
  bool turning_is_two_pi = false;
};

/// Assembles the cusp block from twelve copies of the (0, pi/2, pi/3) triangle.
BlockCheck block_check();

nlohmann::json to_json(const BlockCheck& check);

}  // namespace systolic
