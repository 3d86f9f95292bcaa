#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loci/geom_core.hpp"
#include "loci/loci.hpp"

namespace loci {

// Scene files are line oriented:
//
//   point <name> <x> <y>
//   locus apollonius <A> <B> <m>/<n>
//   locus sumsq <A> <B> <k2>
//   locus diffsq <A> <B> <c>
//   triangle <A> <B> <C> [identity...]
//   window <xmin> <ymin> <xmax> <ymax>
//   # comment
//
// Names must be declared by a `point` line before they are referenced.

inline constexpr std::size_t kMaxSceneDirectives = 64;

struct NamedPoint {
  std::string name;
  Point point;
  friend bool operator==(const NamedPoint&, const NamedPoint&) = default;
};

struct LocusDirective {
  std::string a;
  std::string b;
  LocusSpec spec;
  friend bool operator==(const LocusDirective&, const LocusDirective&) = default;
};

enum class TriangleIdentity {
  Median,        // b^2 + c^2 = 2 m_a^2 + a^2 / 2
  Projection,    // c^2 - b^2 = 2 a n
  Bisector,      // DB / DC = EB / EC = c / b
  MedianSquares, // sum of squared medians = 3/4 sum of squared sides
  Centroid,      // GA^2 + GB^2 + GC^2 = 1/3 sum of squared sides
  Leibniz,       // XA^2 + XB^2 + XC^2 = centroid sum + 3 XG^2
  Circumcenter,  // OG^2 = R^2 - sum of squared sides / 9
};

inline constexpr std::array<TriangleIdentity, 7> kAllIdentities{
    TriangleIdentity::Median,   TriangleIdentity::Projection, TriangleIdentity::Bisector,
    TriangleIdentity::MedianSquares, TriangleIdentity::Centroid, TriangleIdentity::Leibniz,
    TriangleIdentity::Circumcenter,
};

std::string_view to_string(TriangleIdentity id);
std::optional<TriangleIdentity> identity_from_string(std::string_view keyword);

struct TriangleDirective {
  std::array<std::string, 3> vertices;
  /// Empty selects every identity.
  std::vector<TriangleIdentity> identities;
  friend bool operator==(const TriangleDirective&, const TriangleDirective&) = default;
};

using Directive = std::variant<LocusDirective, TriangleDirective>;

struct Window {
  Point min;
  Point max;
  friend bool operator==(const Window&, const Window&) = default;
};

struct Scene {
  std::vector<NamedPoint> points;  // declaration order
  std::vector<Directive> directives;
  std::optional<Window> window;

  /// nullptr when the name is not declared.
  const Point* find(std::string_view name) const;
  const Point& at(std::string_view name) const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message);

  /// 1-based.
  std::size_t line() const noexcept { return line_; }
  /// 1-based, in bytes.
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Accepts LF or CRLF line endings. Throws ParseError on the first problem.
Scene parse_scene(std::string_view source);

/// Canonical text form: points, then the window, then directives, LF line
/// endings, numbers with round-trip precision. parse_scene inverts it.
std::string serialize_scene(const Scene& scene);

}  // namespace loci
