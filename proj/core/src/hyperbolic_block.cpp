#include "systolic/hyperbolic_block.hpp"

#include <stdexcept>

namespace systolic {

ExactLength triangle_area(const HyperbolicTriangle& triangle) {
  Rational sum = 0;
  for (const Rational& angle : triangle.angles) {
    if (angle < 0 || angle >= 1) throw std::invalid_argument("triangle angle outside [0, pi)");
    sum += angle;
  }
  if (sum >= 1) {
    throw std::invalid_argument("angle sum " + sum.get_str() + "*pi is not below pi");
  }
  return ExactLength::pi(Rational(1) - sum);
}

BlockCheck block_check() {
  const Rational third(1, 3);
  BlockCheck check;
  check.piece_area = triangle_area(HyperbolicTriangle{{Rational(0), Rational(1, 2), third}});
  check.block_area = check.piece_area * Rational(12);
  check.corner_angle = ExactLength::pi(third) * Rational(2);
  check.exterior_turning = (ExactLength::pi() - check.corner_angle) * Rational(6);

  const ExactLength two_pi = ExactLength::pi(Rational(2));
  check.area_is_two_pi = check.block_area == two_pi;
  check.corner_is_two_thirds_pi = check.corner_angle == ExactLength::pi(Rational(2, 3));
  check.turning_is_two_pi = check.exterior_turning == two_pi;
  return check;
}

nlohmann::json to_json(const BlockCheck& check) {
  return {
      {"piece_area", check.piece_area.to_string()},
      {"block_area", check.block_area.to_string()},
      {"corner_angle", check.corner_angle.to_string()},
      {"exterior_turning", check.exterior_turning.to_string()},
      {"area_is_two_pi", check.area_is_two_pi},
      {"corner_is_two_thirds_pi", check.corner_is_two_thirds_pi},
      {"turning_is_two_pi", check.turning_is_two_pi},
  };
}

}  // namespace systolic
