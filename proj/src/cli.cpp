#include "loci/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "loci/format.hpp"
#include "loci/loci.hpp"
#include "loci/svg.hpp"
#include "loci/triangle.hpp"
#include "overloaded.hpp"

namespace loci::cli {

namespace {

using detail::overloaded;

/// A file could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, std::string_view what) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file.flush()) throw IoError("cannot write " + path);
}

std::string describe(const LocusDirective& d) {
  return std::visit(overloaded{
                        [&](const ApolloniusSpec& s) {
                          const auto ints = s.ratio.integers();
                          const std::string ratio = ints ? std::to_string(ints->first) + "/" +
                                                               std::to_string(ints->second)
                                                         : format_number(s.ratio.value());
                          return "locus apollonius " + d.a + " " + d.b + " " + ratio;
                        },
                        [&](const SumSquaresSpec& s) {
                          return "locus sumsq " + d.a + " " + d.b + " " + format_number(s.k2);
                        },
                        [&](const DiffSquaresSpec& s) {
                          return "locus diffsq " + d.a + " " + d.b + " " + format_number(s.c);
                        },
                    },
                    d.spec);
}

void print_locus(std::ostream& out, const Locus& locus) {
  out << "locus: " << locus_kind(locus) << "\n";
  std::visit(overloaded{
                 [&](const Circle& c) {
                   out << "center: " << format_point(c.center()) << "\n";
                   out << "radius: " << format_number(c.radius()) << "\n";
                 },
                 [&](const Line& l) {
                   out << "point: " << format_point(l.anchor()) << "\n";
                   out << "direction: (" << format_number(l.direction().x) << ", "
                       << format_number(l.direction().y) << ")\n";
                 },
                 [&](const SinglePoint& p) { out << "point: " << format_point(p.point) << "\n"; },
                 [](const EmptyLocus&) {},
             },
             locus);
}

/// Checks one identity; returns an empty string on success, the reason otherwise.
std::string check_identity(const Scene& scene, const Triangle& t, TriangleIdentity id, const ToleranceProfile& tol) {
  try {
    switch (id) {
      case TriangleIdentity::Median:
        metrics(t, tol);
        break;
      case TriangleIdentity::Projection:
        for (Vertex v : kVertices) median_projection(t, v, tol);
        break;
      case TriangleIdentity::Bisector:
        for (Vertex v : kVertices) {
          const auto [p, q] = t.opposite(v);
          const double expected = dist(t.vertex(v), p) / dist(t.vertex(v), q);
          const auto feet = bisector_feet(t, v, tol);
          if (!approx_eq(ratio_at(p, q, feet.interior, tol), expected, 1.0, tol) ||
              (feet.exterior && !approx_eq(ratio_at(p, q, *feet.exterior, tol), expected, 1.0, tol))) {
            return "bisector foot ratio mismatch at vertex " + std::string(to_string(v));
          }
        }
        break;
      case TriangleIdentity::MedianSquares:
        sum_squared_medians(t, tol);
        break;
      case TriangleIdentity::Centroid:
        centroid_sum_squares(t, tol);
        break;
      case TriangleIdentity::Leibniz:
        leibniz_value(t, t.circumcenter(), tol);
        for (const auto& p : scene.points) leibniz_value(t, p.point, tol);
        break;
      case TriangleIdentity::Circumcenter:
        circumcenter_centroid_gap(t, tol);
        break;
    }
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::IdentityViolation) throw;
    return e.what();
  }
  return {};
}

int render_command(const std::string& scene_path, const std::string& out_path, std::ostream& out) {
  const Scene scene = parse_scene(read_file(scene_path));
  write_output(out_path, render_svg(scene), out);
  return kOk;
}

int verify_command(const std::string& scene_path, const VerifySettings& settings, const std::string& out_path,
                   std::ostream& out) {
  const Scene scene = parse_scene(read_file(scene_path));
  const SceneVerification result = verify_scene(scene, settings);
  std::string text;
  for (const auto& line : result.lines) text += line + "\n";
  text += "summary: " + std::to_string(result.passed) + " passed, " + std::to_string(result.failed) + " failed\n";
  write_output(out_path, text, out);
  return result.ok() ? kOk : kVerificationFailed;
}

int apollonius_command(Point a, Point b, const Ratio& r, std::ostream& out) {
  const ApolloniusResult res = apollonius_locus(a, b, r);
  print_locus(out, res.locus);
  if (res.conjugates) {
    out << "AO: " << format_number(res.center_offset_AO) << "\n";
    out << "OB: " << format_number(res.center_offset_OB) << "\n";
    out << "conjugates: " << format_point(res.conjugates->internal) << " "
        << format_point(res.conjugates->external) << "\n";
  }
  return kOk;
}

int harmonic_command(Point a, Point b, const Ratio& r, std::ostream& out) {
  const ConjugatePair pq = harmonic_conjugates(a, b, r);
  out << "ratio: " << format_number(r.value()) << "\n";
  out << "internal: " << format_point(pq.internal) << "\n";
  out << "external: " << format_point(pq.external) << "\n";
  out << "internal PA/PB: " << format_number(ratio_at(a, b, pq.internal)) << "\n";
  out << "external QA/QB: " << format_number(ratio_at(a, b, pq.external)) << "\n";
  return kOk;
}

int triangle_command(Point pa, Point pb, Point pc, std::optional<Point> x, std::ostream& out) {
  const Triangle t(pa, pb, pc);
  const TriangleMetrics m = metrics(t);
  out << "sides: a=" << format_number(m.a) << " b=" << format_number(m.b) << " c=" << format_number(m.c) << "\n";
  out << "medians: m_a=" << format_number(m.m_a) << " m_b=" << format_number(m.m_b)
      << " m_c=" << format_number(m.m_c) << "\n";
  out << "centroid: " << format_point(m.centroid) << "\n";
  out << "circumcenter: " << format_point(m.circumcenter) << "\n";
  out << "circumradius: " << format_number(m.circumradius) << "\n";
  for (Vertex v : kVertices) {
    const auto feet = bisector_feet(t, v);
    out << "vertex " << to_string(v) << ": median projection " << format_number(median_projection(t, v))
        << ", bisector feet " << format_point(feet.interior) << " "
        << (feet.exterior ? format_point(*feet.exterior) : std::string("at-infinity")) << "\n";
  }
  out << "sum of squared medians: " << format_number(sum_squared_medians(t)) << "\n";
  out << "centroid sum of squares: " << format_number(centroid_sum_squares(t)) << "\n";
  out << "OG^2: " << format_number(circumcenter_centroid_gap(t)) << "\n";
  if (x) out << "XA^2+XB^2+XC^2 at " << format_point(*x) << ": " << format_number(leibniz_value(t, *x)) << "\n";
  return kOk;
}

}  // namespace

Point parse_point_flag(std::string_view text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed point '" + std::string(text) + "', expected x,y");
  }
  return {parse_real(text.substr(0, comma), "coordinate"), parse_real(text.substr(comma + 1), "coordinate")};
}

Ratio parse_ratio_flag(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    const double v = parse_real(text, "ratio");
    if (!(v > 0.0)) throw std::invalid_argument("ratio must be positive");
    return Ratio::from_real(v);
  }
  auto integer = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || v <= 0) {
      throw std::invalid_argument("malformed ratio '" + std::string(text) + "'");
    }
    return v;
  };
  return Ratio::from_integers(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
}

Window verification_box(const Locus& locus, Point a, Point b) {
  double x0 = std::min(a.x(), b.x());
  double x1 = std::max(a.x(), b.x());
  double y0 = std::min(a.y(), b.y());
  double y1 = std::max(a.y(), b.y());
  auto add = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  std::visit(overloaded{
                 [&](const Circle& c) {
                   add(c.center().x() - c.radius(), c.center().y() - c.radius());
                   add(c.center().x() + c.radius(), c.center().y() + c.radius());
                 },
                 [&](const Line& l) { add(l.anchor().x(), l.anchor().y()); },
                 [&](const SinglePoint& p) { add(p.point.x(), p.point.y()); },
                 [](const EmptyLocus&) {},
             },
             locus);
  const double side = 1.4 * std::max({x1 - x0, y1 - y0, dist(a, b)});
  const double cx = 0.5 * (x0 + x1);
  const double cy = 0.5 * (y0 + y1);
  return Window{Point(cx - 0.5 * side, cy - 0.5 * side), Point(cx + 0.5 * side, cy + 0.5 * side)};
}

SceneVerification verify_scene(const Scene& scene, const VerifySettings& settings, const ToleranceProfile& tol) {
  SceneVerification result;
  auto record = [&](std::size_t index, const std::string& what, bool ok, const std::string& detail) {
    result.lines.push_back("[" + std::to_string(index) + "] " + what + ": " + (ok ? "PASS" : "FAIL") +
                           (detail.empty() ? "" : " " + detail));
    ++(ok ? result.passed : result.failed);
  };

  for (std::size_t i = 0; i < scene.directives.size(); ++i) {
    const std::size_t index = i + 1;
    if (const auto* d = std::get_if<LocusDirective>(&scene.directives[i])) {
      const Point a = scene.at(d->a);
      const Point b = scene.at(d->b);
      const Locus locus = construct_locus(d->spec, a, b, tol);
      const Window box = scene.window ? *scene.window : verification_box(locus, a, b);
      const double step = settings.grid_step.value_or((box.max.x() - box.min.x()) / 300.0);
      const GridSpec grid(box.min, box.max, step);
      VerifyOptions options = default_verify_options(d->spec, a, b, grid, settings.band_fraction);
      options.threads = settings.threads;
      const LocusSpec spec = d->spec;
      const ResidualFn residual = [spec, a, b, tol](Point x) { return membership_residual(spec, a, b, x, tol); };
      const VerificationReport report = verify_locus(locus, residual, grid, options);
      std::string detail = format_report(report);
      detail.erase(0, detail.find(' ') + 1);
      record(index, describe(*d) + " (" + std::string(locus_kind(locus)) + ")", report.passed, detail);
    } else {
      const auto& td = std::get<TriangleDirective>(scene.directives[i]);
      const Triangle t(scene.at(td.vertices[0]), scene.at(td.vertices[1]), scene.at(td.vertices[2]), tol);
      const std::vector<TriangleIdentity> ids =
          td.identities.empty() ? std::vector<TriangleIdentity>(kAllIdentities.begin(), kAllIdentities.end())
                                : td.identities;
      for (TriangleIdentity id : ids) {
        const std::string failure = check_identity(scene, t, id, tol);
        record(index,
               "triangle " + td.vertices[0] + " " + td.vertices[1] + " " + td.vertices[2] + " " +
                   std::string(to_string(id)),
               failure.empty(), failure);
      }
    }
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-point loci, harmonic conjugates and triangle identities"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string out_path;
  std::string a_text;
  std::string b_text;
  std::string c_text;
  std::string x_text;
  std::string ratio_text;
  double k2 = 0.0;
  double c_value = 0.0;
  VerifySettings settings;
  double grid_step = 0.0;

  auto* render = app.add_subcommand("render", "Render a scene file to SVG");
  render->add_option("--scene", scene_path, "Scene file")->required();
  render->add_option("--out", out_path, "Output SVG (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Verify every directive of a scene file");
  verify->add_option("--scene", scene_path, "Scene file")->required();
  verify->add_option("--out", out_path, "Report file (default: stdout)");
  auto* step_opt = verify->add_option("--grid-step", grid_step, "Oracle grid spacing")->check(CLI::PositiveNumber);
  verify->add_option("--band", settings.band_fraction, "Band as a fraction of AB or AB^2")
      ->check(CLI::PositiveNumber);

  auto two_points = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "Point A as x,y")->required();
    sub->add_option("--b", b_text, "Point B as x,y")->required();
  };
  auto* apollonius = app.add_subcommand("apollonius", "Apollonius locus XA/XB = ratio");
  two_points(apollonius);
  apollonius->add_option("--ratio", ratio_text, "m/n or a positive real")->required();

  auto* harmonic = app.add_subcommand("harmonic", "Harmonic conjugates of A, B for a ratio");
  two_points(harmonic);
  harmonic->add_option("--ratio", ratio_text, "m/n or a positive real")->required();

  auto* sumsq = app.add_subcommand("sumsq", "Locus MA^2 + MB^2 = k2");
  two_points(sumsq);
  sumsq->add_option("--k2", k2, "Constant k^2")->required();

  auto* diffsq = app.add_subcommand("diffsq", "Locus MA^2 - MB^2 = c");
  two_points(diffsq);
  diffsq->add_option("--c", c_value, "Signed constant c")->required();

  auto* triangle = app.add_subcommand("triangle", "Triangle metrics and identities");
  two_points(triangle);
  triangle->add_option("--c", c_text, "Vertex C as x,y")->required();
  triangle->add_option("--x", x_text, "Evaluate XA^2+XB^2+XC^2 at x,y");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (render->parsed()) return render_command(scene_path, out_path, out);
    if (verify->parsed()) {
      if (step_opt->count() > 0) settings.grid_step = grid_step;
      return verify_command(scene_path, settings, out_path, out);
    }
    if (apollonius->parsed()) {
      return apollonius_command(parse_point_flag(a_text), parse_point_flag(b_text), parse_ratio_flag(ratio_text),
                                out);
    }
    if (harmonic->parsed()) {
      return harmonic_command(parse_point_flag(a_text), parse_point_flag(b_text), parse_ratio_flag(ratio_text), out);
    }
    if (sumsq->parsed()) {
      print_locus(out, sum_squares_locus(parse_point_flag(a_text), parse_point_flag(b_text), k2));
      return kOk;
    }
    if (diffsq->parsed()) {
      print_locus(out, Locus(diff_squares_locus(parse_point_flag(a_text), parse_point_flag(b_text), c_value)));
      return kOk;
    }
    if (triangle->parsed()) {
      std::optional<Point> x;
      if (!x_text.empty()) x = parse_point_flag(x_text);
      return triangle_command(parse_point_flag(a_text), parse_point_flag(b_text), parse_point_flag(c_text), x, out);
    }
  } catch (const ParseError& e) {
    err << scene_path << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::IdentityViolation ? kVerificationFailed : kGeometryError;
  }
  return kParseError;
}

}  // namespace loci::cli
