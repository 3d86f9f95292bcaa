#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "loci/geom_core.hpp"

namespace loci {

/// Positive ratio lambda = m / n. Either an exact integer pair or a real
/// (stored as m = lambda, n = 1).
class Ratio {
 public:
  /// Throws NonPositiveRatio unless both terms are finite and positive.
  Ratio(double m, double n);
  static Ratio from_integers(std::int64_t m, std::int64_t n);
  static Ratio from_real(double lambda);

  double m() const noexcept { return m_; }
  double n() const noexcept { return n_; }
  double value() const noexcept { return m_ / n_; }
  /// The integer pair when constructed from one.
  std::optional<std::pair<std::int64_t, std::int64_t>> integers() const noexcept { return integers_; }
  Ratio inverse() const;
  /// lambda == 1 within rel_eps.
  bool is_unit(const ToleranceProfile& tol = {}) const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  double m_;
  double n_;
  std::optional<std::pair<std::int64_t, std::int64_t>> integers_;
};

struct ConjugatePair {
  Point internal;  // strictly between A and B
  Point external;  // on line AB, outside the segment
};

/// P on segment AB with PA / PB = lambda; AP = m / (m + n) * AB.
Point divide_internal(Point a, Point b, const Ratio& r, const ToleranceProfile& tol = {});

/// Q on line AB outside the segment with QA / QB = lambda. Signed AQ =
/// m / (m - n) * AB, so Q lies beyond B for lambda > 1 and beyond A for
/// lambda < 1. Throws UnitRatio for lambda == 1.
Point divide_external(Point a, Point b, const Ratio& r, const ToleranceProfile& tol = {});

ConjugatePair harmonic_conjugates(Point a, Point b, const Ratio& r, const ToleranceProfile& tol = {});

/// XA / XB. B is a pole: throws PoleAtB when XB < degeneracy_eps * AB.
double ratio_at(Point a, Point b, Point x, const ToleranceProfile& tol = {});

/// Coordinate of x's projection onto line AB, in units of AB, with A at 0
/// and B at 1.
double signed_position(Point a, Point b, Point x, const ToleranceProfile& tol = {});

/// Signed AX / XB for x on line AB (negative outside the segment).
double signed_section_ratio(Point a, Point b, Point x, const ToleranceProfile& tol = {});

}  // namespace loci
