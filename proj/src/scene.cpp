#include "loci/scene.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "overloaded.hpp"

namespace loci {

namespace {

using detail::overloaded;

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '\''; };
  return head(s.front()) && std::all_of(s.begin() + 1, s.end(), tail);
}

std::optional<double> to_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  // from_chars accepts inf/nan spellings; only plain decimal notation is allowed.
  const bool plain = std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
  });
  if (!plain) return std::nullopt;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<std::int64_t> to_positive_integer(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value <= 0) return std::nullopt;
  return value;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  Scene run() {
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      std::size_t end = source_.find('\n', pos);
      if (end == std::string_view::npos) end = source_.size();
      std::string_view line = source_.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no_;
      parse_line(line);
      pos = end + 1;
    }
    return std::move(scene_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, std::string message) const {
    throw ParseError(line_no_, column, std::move(message));
  }

  void expect_arity(const std::vector<Token>& t, std::size_t count, std::string_view usage) const {
    if (t.size() != count) {
      const std::size_t column = t.size() > count ? t[count].column : t.back().column;
      fail(column, "arity mismatch: expected '" + std::string(usage) + "'");
    }
  }

  double number(const Token& t) const {
    const auto v = to_real(t.text);
    if (!v) fail(t.column, "malformed number '" + std::string(t.text) + "'");
    return *v;
  }

  const std::string& declared(const Token& t) const {
    const auto it = std::find_if(scene_.points.begin(), scene_.points.end(),
                                 [&](const NamedPoint& p) { return p.name == t.text; });
    if (it == scene_.points.end()) fail(t.column, "undeclared name " + std::string(t.text));
    return it->name;
  }

  void add_directive(const Token& at, Directive d) {
    if (scene_.directives.size() >= kMaxSceneDirectives) {
      fail(at.column, "too many directives (at most " + std::to_string(kMaxSceneDirectives) + ")");
    }
    scene_.directives.push_back(std::move(d));
  }

  void parse_line(std::string_view line) {
    const auto t = tokenize(line);
    if (t.empty()) return;
    const std::string_view keyword = t[0].text;
    if (keyword == "point") {
      parse_point(t);
    } else if (keyword == "locus") {
      parse_locus(t);
    } else if (keyword == "triangle") {
      parse_triangle(t);
    } else if (keyword == "window") {
      parse_window(t);
    } else {
      fail(t[0].column, "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  void parse_point(const std::vector<Token>& t) {
    expect_arity(t, 4, "point <name> <x> <y>");
    if (!is_identifier(t[1].text)) fail(t[1].column, "invalid name '" + std::string(t[1].text) + "'");
    if (scene_.find(t[1].text)) fail(t[1].column, "duplicate name " + std::string(t[1].text));
    const double x = number(t[2]);
    const double y = number(t[3]);
    scene_.points.push_back({std::string(t[1].text), Point(x, y)});
  }

  void parse_locus(const std::vector<Token>& t) {
    if (t.size() < 2) fail(t[0].column, "arity mismatch: expected 'locus <kind> <A> <B> <parameter>'");
    const std::string_view kind = t[1].text;
    if (kind != "apollonius" && kind != "sumsq" && kind != "diffsq") {
      fail(t[1].column, "unknown locus kind '" + std::string(kind) + "'");
    }
    expect_arity(t, 5, "locus " + std::string(kind) + " <A> <B> <parameter>");
    LocusDirective d{declared(t[2]), declared(t[3]), SumSquaresSpec{0.0}};
    if (kind == "apollonius") {
      d.spec = ApolloniusSpec{parse_ratio(t[4])};
    } else if (kind == "sumsq") {
      d.spec = SumSquaresSpec{number(t[4])};
    } else {
      d.spec = DiffSquaresSpec{number(t[4])};
    }
    add_directive(t[0], std::move(d));
  }

  Ratio parse_ratio(const Token& t) const {
    const std::size_t slash = t.text.find('/');
    if (slash == std::string_view::npos) fail(t.column, "malformed ratio '" + std::string(t.text) + "'");
    const auto m = to_positive_integer(t.text.substr(0, slash));
    const auto n = to_positive_integer(t.text.substr(slash + 1));
    if (!m || !n) fail(t.column, "malformed ratio '" + std::string(t.text) + "'");
    return Ratio::from_integers(*m, *n);
  }

  void parse_triangle(const std::vector<Token>& t) {
    if (t.size() < 4) fail(t.back().column, "arity mismatch: expected 'triangle <A> <B> <C> [identity...]'");
    TriangleDirective d{{declared(t[1]), declared(t[2]), declared(t[3])}, {}};
    for (std::size_t i = 4; i < t.size(); ++i) {
      const auto id = identity_from_string(t[i].text);
      if (!id) fail(t[i].column, "unknown identity '" + std::string(t[i].text) + "'");
      if (std::find(d.identities.begin(), d.identities.end(), *id) != d.identities.end()) {
        fail(t[i].column, "duplicate identity '" + std::string(t[i].text) + "'");
      }
      d.identities.push_back(*id);
    }
    add_directive(t[0], std::move(d));
  }

  void parse_window(const std::vector<Token>& t) {
    expect_arity(t, 5, "window <xmin> <ymin> <xmax> <ymax>");
    if (scene_.window) fail(t[0].column, "duplicate window");
    const double x0 = number(t[1]);
    const double y0 = number(t[2]);
    const double x1 = number(t[3]);
    const double y1 = number(t[4]);
    if (!(x1 > x0 && y1 > y0)) fail(t[1].column, "window max corner must exceed min corner");
    scene_.window = Window{Point(x0, y0), Point(x1, y1)};
  }

  std::string_view source_;
  std::size_t line_no_ = 0;
  Scene scene_;
};

std::string exact(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string_view to_string(TriangleIdentity id) {
  switch (id) {
    case TriangleIdentity::Median: return "median";
    case TriangleIdentity::Projection: return "projection";
    case TriangleIdentity::Bisector: return "bisector";
    case TriangleIdentity::MedianSquares: return "median_squares";
    case TriangleIdentity::Centroid: return "centroid";
    case TriangleIdentity::Leibniz: return "leibniz";
    case TriangleIdentity::Circumcenter: return "circumcenter";
  }
  return "?";
}

std::optional<TriangleIdentity> identity_from_string(std::string_view keyword) {
  for (TriangleIdentity id : kAllIdentities) {
    if (to_string(id) == keyword) return id;
  }
  return std::nullopt;
}

const Point* Scene::find(std::string_view name) const {
  const auto it = std::find_if(points.begin(), points.end(), [&](const NamedPoint& p) { return p.name == name; });
  return it == points.end() ? nullptr : &it->point;
}

const Point& Scene::at(std::string_view name) const {
  const Point* p = find(name);
  if (!p) throw std::out_of_range("undeclared point " + std::string(name));
  return *p;
}

ParseError::ParseError(std::size_t line, std::size_t column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

Scene parse_scene(std::string_view source) { return Parser(source).run(); }

std::string serialize_scene(const Scene& scene) {
  std::string out;
  for (const auto& p : scene.points) {
    out += "point " + p.name + " " + exact(p.point.x()) + " " + exact(p.point.y()) + "\n";
  }
  if (scene.window) {
    out += "window " + exact(scene.window->min.x()) + " " + exact(scene.window->min.y()) + " " +
           exact(scene.window->max.x()) + " " + exact(scene.window->max.y()) + "\n";
  }
  for (const auto& d : scene.directives) {
    std::visit(overloaded{
                   [&](const LocusDirective& l) {
                     out += "locus ";
                     std::visit(overloaded{
                                    [&](const ApolloniusSpec& s) {
                                      const auto ints = s.ratio.integers();
                                      if (!ints) {
                                        throw std::invalid_argument("scene ratios must be integer pairs");
                                      }
                                      out += "apollonius " + l.a + " " + l.b + " " + std::to_string(ints->first) +
                                             "/" + std::to_string(ints->second);
                                    },
                                    [&](const SumSquaresSpec& s) {
                                      out += "sumsq " + l.a + " " + l.b + " " + exact(s.k2);
                                    },
                                    [&](const DiffSquaresSpec& s) {
                                      out += "diffsq " + l.a + " " + l.b + " " + exact(s.c);
                                    },
                                },
                                l.spec);
                     out += "\n";
                   },
                   [&](const TriangleDirective& t) {
                     out += "triangle " + t.vertices[0] + " " + t.vertices[1] + " " + t.vertices[2];
                     for (TriangleIdentity id : t.identities) out += " " + std::string(to_string(id));
                     out += "\n";
                   },
               },
               d);
  }
  return out;
}

}  // namespace loci
