#pragma once

#include <string>

#include "bubblegrid/lattice.hpp"

namespace bubblegrid {

/// One line per row of the bounding box, top row first: 'o' for A, '#' for
/// B, '.' for an empty site. Empty configurations render as "".
std::string render_ascii(const Configuration& config);

/// 20 units per lattice step, points as radius-6 circles (A hollow, B
/// filled) and the interface as line segments between adjacent midpoints.
std::string render_svg(const Configuration& config);

}  // namespace bubblegrid
