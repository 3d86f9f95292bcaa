#include "loci/triangle.hpp"

#include <cmath>
#include <string>

#include "loci/harmonic.hpp"

namespace loci {

namespace {

void check_identity(double lhs, double rhs, double scale, const ToleranceProfile& tol, const char* what) {
  if (!approx_eq(lhs, rhs, scale, tol)) {
    throw GeometryError(ErrorCode::IdentityViolation,
                        std::string(what) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
}

double sum_squared_sides(const Triangle& t) {
  double sum = 0.0;
  for (Vertex v : kVertices) sum += t.side(v) * t.side(v);
  return sum;
}

double median_length(const Triangle& t, Vertex v) {
  const auto [p, q] = t.opposite(v);
  return dist(t.vertex(v), midpoint(p, q));
}

/// Median lengths from vertex-midpoint distances, checked against the median theorem.
std::array<double, 3> checked_medians(const Triangle& t, const ToleranceProfile& tol) {
  const double scale = t.perimeter() * t.perimeter();
  std::array<double, 3> medians{};
  for (std::size_t i = 0; i < kVertices.size(); ++i) {
    const Vertex v = kVertices[i];
    const Vertex next = kVertices[(i + 1) % 3];
    const Vertex prev = kVertices[(i + 2) % 3];
    const double a = t.side(v);
    const double b = t.side(next);
    const double c = t.side(prev);
    medians[i] = median_length(t, v);
    check_identity(b * b + c * c, 2.0 * medians[i] * medians[i] + 0.5 * a * a, scale, tol, "median theorem");
  }
  return medians;
}

}  // namespace

std::string_view to_string(Vertex v) {
  switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    case Vertex::C: return "C";
  }
  return "?";
}

Triangle::Triangle(Point va, Point vb, Point vc, const ToleranceProfile& tol)
    : va_(va), vb_(vb), vc_(vc), tol_(tol) {
  const double p = perimeter();
  if (!(std::abs(twice_signed_area()) > tol.degeneracy_eps() * p * p)) {
    throw GeometryError(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
}

Point Triangle::vertex(Vertex v) const noexcept {
  switch (v) {
    case Vertex::A: return va_;
    case Vertex::B: return vb_;
    case Vertex::C: return vc_;
  }
  return va_;
}

std::array<Point, 2> Triangle::opposite(Vertex v) const noexcept {
  switch (v) {
    case Vertex::A: return {vb_, vc_};
    case Vertex::B: return {vc_, va_};
    case Vertex::C: return {va_, vb_};
  }
  return {vb_, vc_};
}

double Triangle::side(Vertex v) const noexcept {
  const auto [p, q] = opposite(v);
  return dist(p, q);
}

double Triangle::perimeter() const noexcept { return dist(va_, vb_) + dist(vb_, vc_) + dist(vc_, va_); }

double Triangle::twice_signed_area() const noexcept { return cross(vb_ - va_, vc_ - va_); }

Point Triangle::centroid() const {
  return {(va_.x() + vb_.x() + vc_.x()) / 3.0, (va_.y() + vb_.y() + vc_.y()) / 3.0};
}

Point Triangle::circumcenter() const {
  const Line bisector_ab(midpoint(va_, vb_), perp(vb_ - va_));
  const Line bisector_ac(midpoint(va_, vc_), perp(vc_ - va_));
  return intersect(bisector_ab, bisector_ac, tol_);
}

TriangleMetrics metrics(const Triangle& t, const ToleranceProfile& tol) {
  const auto medians = checked_medians(t, tol);
  const Point o = t.circumcenter();
  const double r = dist(o, t.va());
  check_identity(dist(o, t.vb()), r, r, tol, "circumradius OB");
  check_identity(dist(o, t.vc()), r, r, tol, "circumradius OC");
  return TriangleMetrics{
      .a = t.side(Vertex::A),
      .b = t.side(Vertex::B),
      .c = t.side(Vertex::C),
      .m_a = medians[0],
      .m_b = medians[1],
      .m_c = medians[2],
      .centroid = t.centroid(),
      .circumcenter = o,
      .circumradius = r,
  };
}

double median_projection(const Triangle& t, Vertex v, const ToleranceProfile& tol) {
  const Point apex = t.vertex(v);
  const auto [p, q] = t.opposite(v);
  const double base = dist(p, q);
  const double n = (dist2(apex, p) - dist2(apex, q)) / (2.0 * base);

  const Line side = Line::through(p, q);
  const Point foot = foot_of_perpendicular(side, apex);
  const double projected = dot(foot - midpoint(p, q), side.direction());
  check_identity(n, projected, t.perimeter(), tol, "projection theorem");
  return n;
}

BisectorFeet bisector_feet(const Triangle& t, Vertex v, const ToleranceProfile& tol) {
  const Point apex = t.vertex(v);
  const auto [p, q] = t.opposite(v);
  const Ratio adjacent(dist(apex, p), dist(apex, q));
  BisectorFeet feet{.interior = divide_internal(p, q, adjacent, tol), .exterior = std::nullopt};
  if (!adjacent.is_unit(tol)) feet.exterior = divide_external(p, q, adjacent, tol);
  return feet;
}

double sum_squared_medians(const Triangle& t, const ToleranceProfile& tol) {
  const auto medians = checked_medians(t, tol);
  double sum = 0.0;
  for (double m : medians) sum += m * m;
  check_identity(sum, 0.75 * sum_squared_sides(t), t.perimeter() * t.perimeter(), tol,
                 "sum of squared medians");
  return sum;
}

double centroid_sum_squares(const Triangle& t, const ToleranceProfile& tol) {
  const Point g = t.centroid();
  const double value = dist2(g, t.va()) + dist2(g, t.vb()) + dist2(g, t.vc());
  const double scale = t.perimeter() * t.perimeter();
  check_identity(value, sum_squared_sides(t) / 3.0, scale, tol, "centroid sum vs sides");
  check_identity(value, 4.0 / 9.0 * sum_squared_medians(t, tol), scale, tol, "centroid sum vs medians");
  return value;
}

double leibniz_value(const Triangle& t, Point x, const ToleranceProfile& tol) {
  const double value = dist2(x, t.va()) + dist2(x, t.vb()) + dist2(x, t.vc());
  const double xg2 = dist2(x, t.centroid());
  const double scale = t.perimeter() * t.perimeter() + xg2;
  check_identity(value, centroid_sum_squares(t, tol) + 3.0 * xg2, scale, tol, "Leibniz identity");
  return value;
}

double circumcenter_centroid_gap(const Triangle& t, const ToleranceProfile& tol) {
  const Point o = t.circumcenter();
  const double r = dist(o, t.va());
  const double og2 = dist2(o, t.centroid());
  check_identity(og2, r * r - sum_squared_sides(t) / 9.0, r * r, tol, "circumcenter-centroid gap");
  return og2;
}

}  // namespace loci
