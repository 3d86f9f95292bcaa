#include "loci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include "loci/format.hpp"
#include "overloaded.hpp"

namespace loci {

namespace {

using detail::overloaded;

std::size_t axis_count(double lo, double hi, double step) {
  const double cells = std::floor((hi - lo) / step + 1e-9);
  if (cells >= static_cast<double>(std::numeric_limits<std::size_t>::max() / 2)) {
    return std::numeric_limits<std::size_t>::max() / 2;
  }
  return static_cast<std::size_t>(cells) + 1;
}

bool locus_meets_box(const Locus& locus, const GridSpec& grid, const std::vector<Point>& samples) {
  return std::visit(overloaded{
                        [&](const Circle&) {
                          return std::any_of(samples.begin(), samples.end(),
                                             [&](Point p) { return grid.contains(p); });
                        },
                        [&](const Line&) { return !samples.empty(); },
                        [&](const SinglePoint& p) { return grid.contains(p.point); },
                        [](const EmptyLocus&) { return false; },
                    },
                    locus);
}

}  // namespace

GridSpec::GridSpec(Point min, Point max, double step, std::size_t max_samples)
    : min_(min), max_(max), step_(step), max_samples_(max_samples) {
  if (!(max.x() > min.x() && max.y() > min.y())) {
    throw GeometryError(ErrorCode::InvalidGrid, "grid max corner must exceed min corner");
  }
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw GeometryError(ErrorCode::InvalidGrid, "grid step must be positive");
  }
  columns_ = axis_count(min.x(), max.x(), step);
  rows_ = axis_count(min.y(), max.y(), step);
}

std::size_t GridSpec::sample_count() const noexcept {
  if (columns_ != 0 && rows_ > std::numeric_limits<std::size_t>::max() / columns_) {
    return std::numeric_limits<std::size_t>::max();
  }
  return columns_ * rows_;
}

Point GridSpec::sample(std::size_t column, std::size_t row) const {
  return {min_.x() + static_cast<double>(column) * step_, min_.y() + static_cast<double>(row) * step_};
}

bool GridSpec::contains(Point p) const noexcept {
  return p.x() >= min_.x() && p.x() <= max_.x() && p.y() >= min_.y() && p.y() <= max_.y();
}

std::vector<Point> scan_predicate(const ResidualFn& residual, const GridSpec& grid, double band,
                                  unsigned threads) {
  if (grid.sample_count() > grid.max_samples()) {
    throw GeometryError(ErrorCode::GridTooLarge, "grid has " + std::to_string(grid.sample_count()) +
                                                     " samples, cap is " + std::to_string(grid.max_samples()));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t rows = grid.rows();
  const std::size_t workers = std::min<std::size_t>(threads, rows);

  auto scan_rows = [&](std::size_t first, std::size_t last) {
    std::vector<Point> hits;
    for (std::size_t row = first; row < last; ++row) {
      for (std::size_t col = 0; col < grid.columns(); ++col) {
        const Point p = grid.sample(col, row);
        if (std::abs(residual(p)) <= band) hits.push_back(p);
      }
    }
    return hits;
  };

  if (workers <= 1) return scan_rows(0, rows);

  std::vector<std::future<std::vector<Point>>> chunks;
  chunks.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    chunks.push_back(std::async(std::launch::async, scan_rows, rows * w / workers, rows * (w + 1) / workers));
  }
  std::vector<Point> hits;
  for (auto& chunk : chunks) {
    auto part = chunk.get();
    hits.insert(hits.end(), part.begin(), part.end());
  }
  return hits;
}

std::vector<Point> sample_locus(const Locus& locus, const GridSpec& grid) {
  constexpr int kCircleSamples = 360;
  constexpr int kLineSamples = 100;
  return std::visit(overloaded{
                        [](const Circle& c) {
                          std::vector<Point> pts;
                          pts.reserve(kCircleSamples);
                          for (int k = 0; k < kCircleSamples; ++k) {
                            pts.push_back(c.at_angle(2.0 * std::numbers::pi * k / kCircleSamples));
                          }
                          return pts;
                        },
                        [&](const Line& l) {
                          std::vector<Point> pts;
                          const auto span = clip_to_box(l, grid.min(), grid.max());
                          if (!span) return pts;
                          const auto [t0, t1] = *span;
                          pts.reserve(kLineSamples);
                          for (int k = 0; k < kLineSamples; ++k) {
                            pts.push_back(l.at(t0 + (t1 - t0) * k / (kLineSamples - 1)));
                          }
                          return pts;
                        },
                        [](const SinglePoint& p) { return std::vector<Point>{p.point}; },
                        [](const EmptyLocus&) { return std::vector<Point>{}; },
                    },
                    locus);
}

double band_distance_bound(const LocusSpec& spec, Point a, Point b, double band, const GridSpec& grid) {
  const Segment ab(a, b);
  const double len = ab.length();
  const double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [&](const ApolloniusSpec& s) {
            if (!s.ratio.is_unit()) {
              // |grad(XA - lambda XB)| >= |1 - lambda| everywhere.
              return band / std::abs(1.0 - s.ratio.value());
            }
            // |XA - XB| <= band is the region between the two branches of a
            // hyperbola with semi-axis band / 2 about the mediatrix.
            const double semi = 0.5 * band;
            const double focal = 0.5 * len;
            if (semi >= focal) return inf;
            const Point mid = midpoint(a, b);
            const Vec2 along = perp(ab.direction());
            double reach = 0.0;
            for (Point corner : {grid.min(), grid.max(), Point(grid.min().x(), grid.max().y()),
                                 Point(grid.max().x(), grid.min().y())}) {
              reach = std::max(reach, std::abs(dot(corner - mid, along)));
            }
            return semi * std::sqrt(1.0 + reach * reach / (focal * focal - semi * semi));
          },
          [&](const SumSquaresSpec& s) {
            // Residual is 2 (|X - O|^2 - rho^2).
            const double rho2 = 0.5 * s.k2 - 0.25 * len * len;
            if (rho2 < 0.0 && -rho2 > 0.5 * band) return 0.0;
            const double rho = std::sqrt(std::max(0.0, rho2));
            const double outer = std::sqrt(std::max(0.0, rho2) + 0.5 * band) - rho;
            const double inner = rho - std::sqrt(std::max(0.0, rho2 - 0.5 * band));
            return std::max(outer, inner);
          },
          [&](const DiffSquaresSpec&) {
            // Residual is 2 AB times the signed offset from the line.
            return band / (2.0 * len);
          },
      },
      spec);
}

VerifyOptions default_verify_options(const LocusSpec& spec, Point a, Point b, const GridSpec& grid,
                                     double band_fraction) {
  const double scale = residual_scale(spec, a, b);
  VerifyOptions opts;
  opts.band = band_fraction * scale;
  opts.residual_threshold = 1e-9 * scale;
  const double bound = band_distance_bound(spec, a, b, opts.band, grid);
  opts.distance_threshold = std::max(2.0 * grid.step(), bound * (1.0 + 1e-9) + 1e-12 * std::sqrt(scale));
  return opts;
}

VerificationReport verify_locus(const Locus& locus, const ResidualFn& residual, const GridSpec& grid,
                                const VerifyOptions& options) {
  VerificationReport report;

  const auto in_band = scan_predicate(residual, grid, options.band, options.threads);
  report.samples_in_band = in_band.size();
  for (Point p : in_band) {
    report.max_distance_to_locus = std::max(report.max_distance_to_locus, distance_to_locus(locus, p));
  }

  const auto on_locus = sample_locus(locus, grid);
  report.locus_sample_count = on_locus.size();
  for (Point p : on_locus) {
    report.max_predicate_residual_on_locus =
        std::max(report.max_predicate_residual_on_locus, std::abs(residual(p)));
  }

  const bool reachable = !std::holds_alternative<EmptyLocus>(locus) && locus_meets_box(locus, grid, on_locus);
  report.passed = report.max_distance_to_locus <= options.distance_threshold &&
                  report.max_predicate_residual_on_locus <= options.residual_threshold &&
                  (!reachable || report.samples_in_band > 0);
  return report;
}

std::string format_report(const VerificationReport& report) {
  return std::string(report.passed ? "PASS" : "FAIL") + " samples_in_band=" + std::to_string(report.samples_in_band) +
         " max_distance_to_locus=" + format_number(report.max_distance_to_locus) +
         " locus_samples=" + std::to_string(report.locus_sample_count) +
         " max_residual_on_locus=" + format_number(report.max_predicate_residual_on_locus);
}

}  // namespace loci
