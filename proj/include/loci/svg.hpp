#pragma once

#include <string>

#include "loci/geom_core.hpp"
#include "loci/scene.hpp"

namespace loci {

/// Pixel width of every rendered figure; the height follows the window's aspect.
inline constexpr double kSvgWidth = 800.0;

/// Scene window, or the bounding box of every point, circle, locus point and
/// locus line foot with a 10% margin. A box with zero width and height throws
/// WindowDegenerate; a zero extent along one axis borrows the other's.
Window render_window(const Scene& scene, const ToleranceProfile& tol = {});

/// Deterministic SVG 1.1 document. Layout:
///   title (captions of the directives, "; " separated)
///   g#loci      circle | line | path.locus-point per locus directive
///   g#triangles polygon per triangle directive
///   g#points    rect.point marker per declared point
///   g#labels    text.label per declared point
/// Coordinates are printed with six decimals; the y axis points up.
std::string render_svg(const Scene& scene, const ToleranceProfile& tol = {});

}  // namespace loci
