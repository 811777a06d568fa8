#pragma once

// SVG rendering of a 3-variable fan: every maximal cone is intersected
// with the standard simplex x+y+z = 1 (the positive-orthant slice) and
// drawn as a filled polygon in a fixed equilateral chart — first
// variable's vertex right, second left, third top.  Clipping runs in
// exact barycentric coordinates; floating point only at print time, so
// identical inputs give identical bytes.

#include <string>

#include "grobfan/fan.hpp"

namespace grobfan {

// Throws Error unless the fan lives in exactly 3 variables.
std::string render_slice_svg(const FanSummary& summary);

}  // namespace grobfan
