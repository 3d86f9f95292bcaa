#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loci/geom_core.hpp"
#include "loci/harmonic.hpp"
#include "loci/oracle.hpp"
#include "loci/scene.hpp"

namespace loci::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kGeometryError = 2,
  kVerificationFailed = 3,
  kIoError = 4,
};

/// "x,y". Throws std::invalid_argument.
Point parse_point_flag(std::string_view text);
/// "m/n" with positive integers, or a positive real. Throws std::invalid_argument.
Ratio parse_ratio_flag(std::string_view text);

struct VerifySettings {
  /// Defaults to 1/300 of the verification box side.
  std::optional<double> grid_step;
  /// Band as a fraction of AB (Apollonius) or AB^2 (quadratic loci).
  double band_fraction = 0.02;
  unsigned threads = 0;
};

struct SceneVerification {
  std::vector<std::string> lines;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// Box the oracle scans for a locus directive when the scene has no window.
Window verification_box(const Locus& locus, Point a, Point b);

/// Runs the oracle on every locus directive and the selected identities on
/// every triangle directive. Geometric degeneracies propagate as GeometryError.
SceneVerification verify_scene(const Scene& scene, const VerifySettings& settings = {},
                               const ToleranceProfile& tol = {});

/// Full command-line entry point. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loci::cli
