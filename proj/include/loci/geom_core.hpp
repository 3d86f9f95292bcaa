#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace loci {

enum class ErrorCode {
  NonFinite,
  DegenerateSegment,
  DegenerateLine,
  NonPositiveRadius,
  InvalidTolerance,
  UnitRatio,
  PoleAtB,
  NonPositiveRatio,
  NegativeConstant,
  DegenerateTriangle,
  IdentityViolation,
  InvalidGrid,
  GridTooLarge,
  WindowDegenerate,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every geometric constructor or operation when its
/// preconditions are not met.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Absolute and relative epsilons shared by every residual check.
class ToleranceProfile {
 public:
  ToleranceProfile() = default;
  ToleranceProfile(double abs_eps, double rel_eps, double degeneracy_eps);

  double abs_eps() const noexcept { return abs_eps_; }
  double rel_eps() const noexcept { return rel_eps_; }
  double degeneracy_eps() const noexcept { return degeneracy_eps_; }

 private:
  double abs_eps_ = 1e-9;
  double rel_eps_ = 1e-9;
  double degeneracy_eps_ = 1e-12;
};

/// Displacement between two points. Unconstrained.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator-(Vec2 u) { return {-u.x, -u.y}; }
  friend Vec2 operator*(double s, Vec2 u) { return {s * u.x, s * u.y}; }
  friend Vec2 operator*(Vec2 u, double s) { return {s * u.x, s * u.y}; }
  friend Vec2 operator/(Vec2 u, double s) { return {u.x / s, u.y / s}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }
inline double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
inline double norm(Vec2 u) { return std::hypot(u.x, u.y); }
inline double norm2(Vec2 u) { return dot(u, u); }
/// Counter-clockwise quarter turn.
inline Vec2 perp(Vec2 u) { return {-u.y, u.x}; }

/// A position in the plane. Coordinates are always finite.
class Point {
 public:
  constexpr Point() = default;
  Point(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  friend Vec2 operator-(Point p, Point q) { return {p.x_ - q.x_, p.y_ - q.y_}; }
  friend Point operator+(Point p, Vec2 v) { return {p.x_ + v.x, p.y_ + v.y}; }
  friend Point operator-(Point p, Vec2 v) { return {p.x_ - v.x, p.y_ - v.y}; }
  friend bool operator==(Point, Point) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

class Segment {
 public:
  /// Throws DegenerateSegment when the endpoints are closer than
  /// tol.degeneracy_eps().
  Segment(Point a, Point b, const ToleranceProfile& tol = {});

  Point a() const noexcept { return a_; }
  Point b() const noexcept { return b_; }
  double length() const noexcept { return length_; }
  /// Unit vector from a to b.
  Vec2 direction() const noexcept { return (b_ - a_) / length_; }

 private:
  Point a_;
  Point b_;
  double length_;
};

class Line {
 public:
  /// The direction is normalized; a (near) zero direction throws DegenerateLine.
  Line(Point anchor, Vec2 direction);
  static Line through(Point p, Point q);

  Point anchor() const noexcept { return anchor_; }
  Vec2 direction() const noexcept { return direction_; }
  Vec2 normal() const noexcept { return perp(direction_); }
  Point at(double t) const { return anchor_ + t * direction_; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Point anchor_;
  Vec2 direction_;
};

class Circle {
 public:
  Circle(Point center, double radius);

  Point center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  Point at_angle(double theta) const;

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  Point center_;
  double radius_;
};

double dist(Point p, Point q);
double dist2(Point p, Point q);
Point midpoint(Point p, Point q);
/// Point dividing pq at parameter t (t = 0 gives p, t = 1 gives q).
Point lerp(Point p, Point q, double t);

Point foot_of_perpendicular(const Line& line, Point p);
/// Signed distance from p to the line, positive on the normal() side.
double signed_distance(const Line& line, Point p);
/// Coordinate of the projection of p along the line's direction.
double line_parameter(const Line& line, Point p);
/// Throws DegenerateLine when the lines are parallel within degeneracy_eps.
Point intersect(const Line& l1, const Line& l2, const ToleranceProfile& tol = {});

/// Parameter interval [t0, t1] of the line inside the closed box, if any.
std::optional<std::pair<double, double>> clip_to_box(const Line& line, Point min, Point max);

/// |u - v| <= abs_eps * scale + rel_eps * max(|u|, |v|)
bool approx_eq(double u, double v, double scale, const ToleranceProfile& tol = {});

}  // namespace loci
