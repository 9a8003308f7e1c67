#pragma once

#include <string>

#include "systolic/systole_census.hpp"

namespace systolic::cli {

/// The annulus chart: chimney discs, belt hulls, and meridians, counted
/// meridians in green and excluded ones in red.
std::string systoles_svg(const SphereModel& model, const Census& census);

/// The capped cylinder seen from the side, chimneys along the band.
std::string sphere_svg(const SphereModel& model, const Census& census);

}  // namespace systolic::cli
