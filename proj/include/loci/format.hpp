#pragma once

#include <string>

#include "loci/geom_core.hpp"

namespace loci {

/// Nine significant digits ("%.9g"), with negative zero printed as 0.
std::string format_number(double v);

/// "(x, y)" using format_number.
std::string format_point(Point p);

/// Six decimal places, never exponent notation, no negative zero.
std::string format_fixed6(double v);

}  // namespace loci
