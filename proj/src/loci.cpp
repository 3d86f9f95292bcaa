#include "loci/loci.hpp"

#include <cmath>
#include <limits>

#include "overloaded.hpp"

namespace loci {

namespace {

using detail::overloaded;

Line perpendicular_through(const Segment& ab, Point p) { return Line(p, perp(ab.direction())); }

}  // namespace

std::string_view locus_kind(const Locus& locus) {
  return std::visit(overloaded{
                        [](const Circle&) { return std::string_view("Circle"); },
                        [](const Line&) { return std::string_view("Line"); },
                        [](const SinglePoint&) { return std::string_view("SinglePoint"); },
                        [](const EmptyLocus&) { return std::string_view("Empty"); },
                    },
                    locus);
}

ApolloniusResult apollonius_locus(Point a, Point b, const Ratio& r, const ToleranceProfile& tol) {
  const Segment ab(a, b, tol);
  if (r.is_unit(tol)) {
    const Point mid = midpoint(a, b);
    return ApolloniusResult{
        .locus = perpendicular_through(ab, mid),
        .conjugates = std::nullopt,
        .center_offset_AO = 0.5 * ab.length(),
        .center_offset_OB = 0.5 * ab.length(),
        .radius = std::numeric_limits<double>::infinity(),
    };
  }
  const ConjugatePair pq = harmonic_conjugates(a, b, r, tol);
  const Point center = midpoint(pq.internal, pq.external);
  const double radius = 0.5 * dist(pq.internal, pq.external);
  return ApolloniusResult{
      .locus = Circle(center, radius),
      .conjugates = pq,
      .center_offset_AO = dist(a, center),
      .center_offset_OB = dist(center, b),
      .radius = radius,
  };
}

Locus sum_squares_locus(Point a, Point b, double k2, const ToleranceProfile& tol) {
  const Segment ab(a, b, tol);
  if (!std::isfinite(k2)) {
    throw GeometryError(ErrorCode::NonFinite, "sum of squares constant must be finite");
  }
  if (k2 < 0.0) {
    throw GeometryError(ErrorCode::NegativeConstant, "sum of squares constant must be non-negative");
  }
  const double ab2 = ab.length() * ab.length();
  const double d2 = 0.5 * k2 - 0.25 * ab2;
  const Point mid = midpoint(a, b);
  if (std::abs(d2) <= tol.abs_eps() * ab2) return SinglePoint{mid};
  if (d2 > 0.0) return Circle(mid, std::sqrt(d2));
  return EmptyLocus{};
}

Line diff_squares_locus(Point a, Point b, double c, const ToleranceProfile& tol) {
  const Segment ab(a, b, tol);
  if (!std::isfinite(c)) {
    throw GeometryError(ErrorCode::NonFinite, "difference of squares constant must be finite");
  }
  const Point foot = midpoint(a, b) + (c / (2.0 * ab.length())) * ab.direction();
  return perpendicular_through(ab, foot);
}

Locus construct_locus(const LocusSpec& spec, Point a, Point b, const ToleranceProfile& tol) {
  return std::visit(overloaded{
                        [&](const ApolloniusSpec& s) { return apollonius_locus(a, b, s.ratio, tol).locus; },
                        [&](const SumSquaresSpec& s) { return sum_squares_locus(a, b, s.k2, tol); },
                        [&](const DiffSquaresSpec& s) { return Locus(diff_squares_locus(a, b, s.c, tol)); },
                    },
                    spec);
}

double membership_residual(const LocusSpec& spec, Point a, Point b, Point x, const ToleranceProfile& tol) {
  [[maybe_unused]] const Segment ab(a, b, tol);
  return std::visit(overloaded{
                        [&](const ApolloniusSpec& s) { return dist(x, a) - s.ratio.value() * dist(x, b); },
                        [&](const SumSquaresSpec& s) { return dist2(x, a) + dist2(x, b) - s.k2; },
                        [&](const DiffSquaresSpec& s) { return dist2(x, a) - dist2(x, b) - s.c; },
                    },
                    spec);
}

double residual_scale(const LocusSpec& spec, Point a, Point b) {
  const double len = dist(a, b);
  return std::holds_alternative<ApolloniusSpec>(spec) ? len : len * len;
}

double distance_to_locus(const Locus& locus, Point x) {
  return std::visit(overloaded{
                        [&](const Circle& c) { return std::abs(dist(x, c.center()) - c.radius()); },
                        [&](const Line& l) { return std::abs(signed_distance(l, x)); },
                        [&](const SinglePoint& p) { return dist(x, p.point); },
                        [](const EmptyLocus&) { return std::numeric_limits<double>::infinity(); },
                    },
                    locus);
}

bool locus_contains(const Locus& locus, Point x, const ToleranceProfile& tol, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("locus_contains: scale must be positive");
  }
  return distance_to_locus(locus, x) <= tol.abs_eps() * scale;
}

}  // namespace loci
