#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "loci/geom_core.hpp"

namespace loci {

/// Vertex selector. Sides follow the usual labelling: a = BC, b = CA, c = AB,
/// so the side opposite a vertex shares its letter.
enum class Vertex { A, B, C };

inline constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};

std::string_view to_string(Vertex v);

class Triangle {
 public:
  /// Throws DegenerateTriangle unless |2 * signed area| > degeneracy_eps * perimeter^2.
  Triangle(Point va, Point vb, Point vc, const ToleranceProfile& tol = {});

  Point va() const noexcept { return va_; }
  Point vb() const noexcept { return vb_; }
  Point vc() const noexcept { return vc_; }
  Point vertex(Vertex v) const noexcept;
  /// The two other vertices in cyclic order: A -> (B, C), B -> (C, A), C -> (A, B).
  std::array<Point, 2> opposite(Vertex v) const noexcept;
  /// Length of the side opposite v.
  double side(Vertex v) const noexcept;
  double perimeter() const noexcept;
  double twice_signed_area() const noexcept;
  Point centroid() const;
  /// Intersection of the perpendicular bisectors of AB and AC.
  Point circumcenter() const;

 private:
  Point va_;
  Point vb_;
  Point vc_;
  ToleranceProfile tol_;
};

struct TriangleMetrics {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double m_a = 0.0;
  double m_b = 0.0;
  double m_c = 0.0;
  Point centroid;
  Point circumcenter;
  double circumradius = 0.0;
};

/// The identity checks below throw GeometryError(IdentityViolation) when
/// the two independent evaluations disagree beyond tolerance.

/// Sides, medians (vertex to midpoint, checked against 2b^2 + 2c^2 - a^2 =
/// 4 m_a^2 cyclically), centroid, circumcenter and circumradius.
TriangleMetrics metrics(const Triangle& t, const ToleranceProfile& tol = {});

/// Signed projection n of the median from v onto the opposite side, oriented
/// along the cyclic side direction (B -> C for vertex A). Returns
/// (c^2 - b^2) / (2a) for A, cyclically otherwise, after checking it against
/// the foot-of-perpendicular construction.
double median_projection(const Triangle& t, Vertex v, const ToleranceProfile& tol = {});

struct BisectorFeet {
  Point interior;
  /// nullopt when the two adjacent sides are equal: the exterior bisector is
  /// parallel to the opposite side.
  std::optional<Point> exterior;
};

/// Feet of the interior and exterior bisectors from v on the opposite side
/// line: DB / DC = EB / EC = c / b for vertex A.
BisectorFeet bisector_feet(const Triangle& t, Vertex v, const ToleranceProfile& tol = {});

/// m_a^2 + m_b^2 + m_c^2, checked against (3/4)(a^2 + b^2 + c^2).
double sum_squared_medians(const Triangle& t, const ToleranceProfile& tol = {});

/// GA^2 + GB^2 + GC^2, checked against (1/3)(a^2 + b^2 + c^2) and
/// (4/9)(m_a^2 + m_b^2 + m_c^2).
double centroid_sum_squares(const Triangle& t, const ToleranceProfile& tol = {});

/// XA^2 + XB^2 + XC^2, checked against centroid_sum_squares + 3 XG^2.
double leibniz_value(const Triangle& t, Point x, const ToleranceProfile& tol = {});

/// OG^2 from coordinates, checked against R^2 - (a^2 + b^2 + c^2) / 9.
double circumcenter_centroid_gap(const Triangle& t, const ToleranceProfile& tol = {});

}  // namespace loci
