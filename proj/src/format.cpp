#include "loci/format.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

namespace loci {

namespace {

std::string print(const char* fmt, double v) {
  char buf[512];
  const int n = std::snprintf(buf, sizeof buf, fmt, v);
  std::string out(buf, static_cast<std::size_t>(n));
  // Anything that rounds to zero prints unsigned.
  if (!out.empty() && out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return print("%.9g", v);
}

std::string format_point(Point p) { return "(" + format_number(p.x()) + ", " + format_number(p.y()) + ")"; }

std::string format_fixed6(double v) { return print("%.6f", v); }

}  // namespace loci
