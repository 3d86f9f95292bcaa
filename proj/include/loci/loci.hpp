#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "loci/geom_core.hpp"
#include "loci/harmonic.hpp"

namespace loci {

struct SinglePoint {
  Point point;
  friend bool operator==(const SinglePoint&, const SinglePoint&) = default;
};

struct EmptyLocus {
  friend bool operator==(const EmptyLocus&, const EmptyLocus&) = default;
};

/// Common result type of the locus constructors.
using Locus = std::variant<Circle, Line, SinglePoint, EmptyLocus>;

std::string_view locus_kind(const Locus& locus);

struct ApolloniusResult {
  Locus locus;
  /// Absent for lambda == 1, where the external conjugate is at infinity.
  std::optional<ConjugatePair> conjugates;
  /// Distance from A to the circle's center (to the mediatrix foot when lambda == 1).
  double center_offset_AO = 0.0;
  /// Distance from the center to B.
  double center_offset_OB = 0.0;
  /// +infinity for the mediatrix.
  double radius = 0.0;
};

/// {X : XA / XB = lambda}. The circle on the harmonic conjugate pair as
/// diameter, or the perpendicular bisector of AB when lambda == 1.
ApolloniusResult apollonius_locus(Point a, Point b, const Ratio& r, const ToleranceProfile& tol = {});

/// {M : MA^2 + MB^2 = k2}: circle about the midpoint with radius^2 =
/// k2/2 - AB^2/4, a single point when that is zero within abs_eps * AB^2,
/// empty when negative. Throws NegativeConstant for k2 < 0.
Locus sum_squares_locus(Point a, Point b, double k2, const ToleranceProfile& tol = {});

/// {M : MA^2 - MB^2 = c}: line perpendicular to AB through the point at
/// signed offset c / (2 AB) from the midpoint, measured along A -> B.
Line diff_squares_locus(Point a, Point b, double c, const ToleranceProfile& tol = {});

struct ApolloniusSpec {
  Ratio ratio;
  friend bool operator==(const ApolloniusSpec&, const ApolloniusSpec&) = default;
};
struct SumSquaresSpec {
  double k2;
  friend bool operator==(const SumSquaresSpec&, const SumSquaresSpec&) = default;
};
struct DiffSquaresSpec {
  double c;
  friend bool operator==(const DiffSquaresSpec&, const DiffSquaresSpec&) = default;
};

/// Which locus, and its parameter.
using LocusSpec = std::variant<ApolloniusSpec, SumSquaresSpec, DiffSquaresSpec>;

Locus construct_locus(const LocusSpec& spec, Point a, Point b, const ToleranceProfile& tol = {});

/// Apollonius: XA - lambda * XB. Sum of squares: XA^2 + XB^2 - k2.
/// Difference of squares: XA^2 - XB^2 - c.
double membership_residual(const LocusSpec& spec, Point a, Point b, Point x,
                           const ToleranceProfile& tol = {});

/// Natural unit of the residual: AB for the Apollonius residual, AB^2 for
/// the two quadratic ones.
double residual_scale(const LocusSpec& spec, Point a, Point b);

/// Euclidean distance from x to the locus point set (+infinity for Empty).
double distance_to_locus(const Locus& locus, Point x);

bool locus_contains(const Locus& locus, Point x, const ToleranceProfile& tol, double scale);

}  // namespace loci
