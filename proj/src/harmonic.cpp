#include "loci/harmonic.hpp"

#include <algorithm>
#include <cmath>

namespace loci {

Ratio::Ratio(double m, double n) : m_(m), n_(n) {
  if (!std::isfinite(m) || !std::isfinite(n) || !(m > 0.0) || !(n > 0.0)) {
    throw GeometryError(ErrorCode::NonPositiveRatio, "ratio terms must be finite and positive");
  }
  if (!std::isfinite(m / n) || !(m / n > 0.0)) {
    throw GeometryError(ErrorCode::NonPositiveRatio, "ratio value must be finite and positive");
  }
}

Ratio Ratio::from_integers(std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0) {
    throw GeometryError(ErrorCode::NonPositiveRatio, "ratio terms must be positive integers");
  }
  Ratio r(static_cast<double>(m), static_cast<double>(n));
  r.integers_ = std::pair{m, n};
  return r;
}

Ratio Ratio::from_real(double lambda) { return Ratio(lambda, 1.0); }

Ratio Ratio::inverse() const {
  if (integers_) return from_integers(integers_->second, integers_->first);
  return Ratio(n_, m_);
}

bool Ratio::is_unit(const ToleranceProfile& tol) const {
  return std::abs(m_ - n_) <= tol.rel_eps() * std::max(m_, n_);
}

Point divide_internal(Point a, Point b, const Ratio& r, const ToleranceProfile& tol) {
  [[maybe_unused]] const Segment ab(a, b, tol);
  return lerp(a, b, r.m() / (r.m() + r.n()));
}

Point divide_external(Point a, Point b, const Ratio& r, const ToleranceProfile& tol) {
  [[maybe_unused]] const Segment ab(a, b, tol);
  if (r.is_unit(tol)) {
    throw GeometryError(ErrorCode::UnitRatio, "external division by a unit ratio lies at infinity");
  }
  return lerp(a, b, r.m() / (r.m() - r.n()));
}

ConjugatePair harmonic_conjugates(Point a, Point b, const Ratio& r, const ToleranceProfile& tol) {
  return {divide_internal(a, b, r, tol), divide_external(a, b, r, tol)};
}

double ratio_at(Point a, Point b, Point x, const ToleranceProfile& tol) {
  const Segment ab(a, b, tol);
  const double xb = dist(x, b);
  if (xb < tol.degeneracy_eps() * ab.length()) {
    throw GeometryError(ErrorCode::PoleAtB, "XA/XB diverges at B");
  }
  if (x == a) return 0.0;
  return dist(x, a) / xb;
}

double signed_position(Point a, Point b, Point x, const ToleranceProfile& tol) {
  const Segment ab(a, b, tol);
  return dot(x - a, b - a) / (ab.length() * ab.length());
}

double signed_section_ratio(Point a, Point b, Point x, const ToleranceProfile& tol) {
  const double t = signed_position(a, b, x, tol);
  if (std::abs(1.0 - t) < tol.degeneracy_eps()) {
    throw GeometryError(ErrorCode::PoleAtB, "section ratio diverges at B");
  }
  return t / (1.0 - t);
}

}  // namespace loci
