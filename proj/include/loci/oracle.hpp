#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "loci/geom_core.hpp"
#include "loci/loci.hpp"

namespace loci {

/// Residual whose zero set is the locus under test. Must be safe to call
/// concurrently.
using ResidualFn = std::function<double(Point)>;

/// Regular lattice over an axis-aligned box, enumerated row-major (y outer,
/// x inner) starting at the min corner.
class GridSpec {
 public:
  static constexpr std::size_t kDefaultMaxSamples = 10'000'000;

  /// Throws InvalidGrid unless max > min component-wise and step > 0.
  GridSpec(Point min, Point max, double step, std::size_t max_samples = kDefaultMaxSamples);

  Point min() const noexcept { return min_; }
  Point max() const noexcept { return max_; }
  double step() const noexcept { return step_; }
  std::size_t max_samples() const noexcept { return max_samples_; }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return rows_; }
  /// columns * rows, saturating.
  std::size_t sample_count() const noexcept;
  Point sample(std::size_t column, std::size_t row) const;
  bool contains(Point p) const noexcept;

 private:
  Point min_;
  Point max_;
  double step_;
  std::size_t max_samples_;
  std::size_t columns_;
  std::size_t rows_;
};

/// Every grid point with |residual| <= band, in row-major order. Rows are
/// split across `threads` workers (0 picks the hardware concurrency) and
/// merged in index order, so the result never depends on the thread count.
/// Throws GridTooLarge when the grid exceeds its sample cap.
std::vector<Point> scan_predicate(const ResidualFn& residual, const GridSpec& grid, double band,
                                  unsigned threads = 0);

struct VerifyOptions {
  /// In-band threshold, in residual units.
  double band = 0.0;
  /// Maximum allowed distance from an in-band grid point to the locus.
  double distance_threshold = 0.0;
  /// Maximum allowed |residual| at a sampled locus point.
  double residual_threshold = 0.0;
  unsigned threads = 0;
};

struct VerificationReport {
  std::size_t samples_in_band = 0;
  double max_distance_to_locus = 0.0;
  std::size_t locus_sample_count = 0;
  double max_predicate_residual_on_locus = 0.0;
  bool passed = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Points on the locus for the reverse check: 360 equally spaced on a
/// circle, 100 evenly spread over the part of a line inside the grid box,
/// the point itself for SinglePoint, none for Empty.
std::vector<Point> sample_locus(const Locus& locus, const GridSpec& grid);

/// Largest distance from the locus that a point with |residual| <= band can
/// have. Infinite when the band region is unbounded inside the grid box.
double band_distance_bound(const LocusSpec& spec, Point a, Point b, double band, const GridSpec& grid);

/// Band = band_fraction * residual_scale, residual threshold = 1e-9 *
/// residual_scale, distance threshold = max(2 * step, band_distance_bound).
VerifyOptions default_verify_options(const LocusSpec& spec, Point a, Point b, const GridSpec& grid,
                                     double band_fraction = 0.02);

/// Two-sided check of locus == {x : residual(x) == 0}: every in-band grid
/// point must be near the locus, and every sampled locus point must have a
/// small residual.
VerificationReport verify_locus(const Locus& locus, const ResidualFn& residual, const GridSpec& grid,
                                const VerifyOptions& options);

/// Deterministic one-line rendering (fixed field order, 9 significant digits).
std::string format_report(const VerificationReport& report);

}  // namespace loci
