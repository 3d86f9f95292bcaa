#include "loci/geom_core.hpp"

#include <algorithm>
#include <limits>

namespace loci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::UnitRatio: return "UnitRatio";
    case ErrorCode::PoleAtB: return "PoleAtB";
    case ErrorCode::NonPositiveRatio: return "NonPositiveRatio";
    case ErrorCode::NegativeConstant: return "NegativeConstant";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::WindowDegenerate: return "WindowDegenerate";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ToleranceProfile::ToleranceProfile(double abs_eps, double rel_eps, double degeneracy_eps)
    : abs_eps_(abs_eps), rel_eps_(rel_eps), degeneracy_eps_(degeneracy_eps) {
  if (!(abs_eps > 0.0 && rel_eps > 0.0 && degeneracy_eps > 0.0)) {
    throw GeometryError(ErrorCode::InvalidTolerance, "epsilons must be strictly positive");
  }
  if (abs_eps < degeneracy_eps) {
    throw GeometryError(ErrorCode::InvalidTolerance, "abs_eps must not be below degeneracy_eps");
  }
}

Point::Point(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw GeometryError(ErrorCode::NonFinite, "point coordinates must be finite");
  }
}

Segment::Segment(Point a, Point b, const ToleranceProfile& tol)
    : a_(a), b_(b), length_(dist(a, b)) {
  if (!(length_ > tol.degeneracy_eps())) {
    throw GeometryError(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  }
}

Line::Line(Point anchor, Vec2 direction) : anchor_(anchor) {
  const double len = norm(direction);
  if (!std::isfinite(len) || len <= 0.0) {
    throw GeometryError(ErrorCode::DegenerateLine, "line direction must be a nonzero finite vector");
  }
  direction_ = direction / len;
}

Line Line::through(Point p, Point q) { return Line(p, q - p); }

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
  if (!std::isfinite(radius)) {
    throw GeometryError(ErrorCode::NonFinite, "circle radius must be finite");
  }
  if (!(radius > 0.0)) {
    throw GeometryError(ErrorCode::NonPositiveRadius, "circle radius must be positive");
  }
}

Point Circle::at_angle(double theta) const {
  return center_ + Vec2{radius_ * std::cos(theta), radius_ * std::sin(theta)};
}

double dist(Point p, Point q) { return norm(p - q); }

double dist2(Point p, Point q) { return norm2(p - q); }

Point midpoint(Point p, Point q) {
  return {0.5 * (p.x() + q.x()), 0.5 * (p.y() + q.y())};
}

Point lerp(Point p, Point q, double t) {
  return {p.x() + t * (q.x() - p.x()), p.y() + t * (q.y() - p.y())};
}

Point foot_of_perpendicular(const Line& line, Point p) {
  return line.at(line_parameter(line, p));
}

double signed_distance(const Line& line, Point p) {
  return dot(p - line.anchor(), line.normal());
}

double line_parameter(const Line& line, Point p) {
  return dot(p - line.anchor(), line.direction());
}

Point intersect(const Line& l1, const Line& l2, const ToleranceProfile& tol) {
  const double denom = cross(l1.direction(), l2.direction());
  if (std::abs(denom) <= tol.degeneracy_eps()) {
    throw GeometryError(ErrorCode::DegenerateLine, "lines are parallel");
  }
  const double t = cross(l2.anchor() - l1.anchor(), l2.direction()) / denom;
  return l1.at(t);
}

std::optional<std::pair<double, double>> clip_to_box(const Line& line, Point min, Point max) {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const double origin[2] = {line.anchor().x(), line.anchor().y()};
  const double dir[2] = {line.direction().x, line.direction().y};
  const double lo[2] = {min.x(), min.y()};
  const double hi[2] = {max.x(), max.y()};
  for (int k = 0; k < 2; ++k) {
    if (dir[k] == 0.0) {
      if (origin[k] < lo[k] || origin[k] > hi[k]) return std::nullopt;
      continue;
    }
    double ta = (lo[k] - origin[k]) / dir[k];
    double tb = (hi[k] - origin[k]) / dir[k];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  if (t0 > t1) return std::nullopt;
  return std::pair{t0, t1};
}

bool approx_eq(double u, double v, double scale, const ToleranceProfile& tol) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("approx_eq: scale must be positive");
  }
  return std::abs(u - v) <= tol.abs_eps() * scale + tol.rel_eps() * std::max(std::abs(u), std::abs(v));
}

}  // namespace loci
