#include "loci/svg.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "loci/format.hpp"
#include "loci/loci.hpp"
#include "loci/triangle.hpp"
#include "overloaded.hpp"

namespace loci {

namespace {

using detail::overloaded;

constexpr double kMarkerHalf = 3.0;
constexpr double kLabelOffset = 6.0;

struct Bounds {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Point p) { add(p.x(), p.y()); }
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  bool empty() const { return x0 > x1; }
};

struct Evaluated {
  Locus locus;
  std::string caption;
};

Evaluated evaluate(const Scene& scene, const LocusDirective& d, const ToleranceProfile& tol) {
  const Point a = scene.at(d.a);
  const Point b = scene.at(d.b);
  Locus locus = construct_locus(d.spec, a, b, tol);
  std::string caption = std::visit(overloaded{
                                       [&](const ApolloniusSpec& s) {
                                         return std::string(s.ratio.is_unit(tol) ? "Perpendicular bisector"
                                                                                 : "Apollonius circle");
                                       },
                                       [](const SumSquaresSpec&) { return std::string("Sum-of-squares locus"); },
                                       [](const DiffSquaresSpec&) {
                                         return std::string("Difference-of-squares line");
                                       },
                                   },
                                   d.spec);
  caption += " " + d.a + d.b;
  return {std::move(locus), std::move(caption)};
}

class Canvas {
 public:
  explicit Canvas(const Window& w)
      : w_(w), scale_(kSvgWidth / (w.max.x() - w.min.x())), height_((w.max.y() - w.min.y()) * scale_) {}

  double height() const { return height_; }
  double scale() const { return scale_; }
  std::string x(double v) const { return format_fixed6((v - w_.min.x()) * scale_); }
  std::string y(double v) const { return format_fixed6((w_.max.y() - v) * scale_); }
  double px(Point p) const { return (p.x() - w_.min.x()) * scale_; }
  double py(Point p) const { return (w_.max.y() - p.y()) * scale_; }

 private:
  Window w_;
  double scale_;
  double height_;
};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Window render_window(const Scene& scene, const ToleranceProfile& tol) {
  if (scene.window) return *scene.window;

  Bounds box;
  for (const auto& p : scene.points) box.add(p.point);
  for (const auto& d : scene.directives) {
    const auto* l = std::get_if<LocusDirective>(&d);
    if (!l) continue;
    std::visit(overloaded{
                   [&](const Circle& c) {
                     box.add(c.center().x() - c.radius(), c.center().y() - c.radius());
                     box.add(c.center().x() + c.radius(), c.center().y() + c.radius());
                   },
                   [&](const Line& line) { box.add(line.anchor()); },
                   [&](const SinglePoint& p) { box.add(p.point); },
                   [](const EmptyLocus&) {},
               },
               evaluate(scene, *l, tol).locus);
  }
  if (box.empty()) throw GeometryError(ErrorCode::WindowDegenerate, "scene has no geometry to frame");

  double w = box.x1 - box.x0;
  double h = box.y1 - box.y0;
  if (!(w > 0.0) && !(h > 0.0)) throw GeometryError(ErrorCode::WindowDegenerate, "scene geometry has zero extent");
  if (!(w > 0.0)) {
    box.x0 -= 0.5 * h;
    w = h;
  }
  if (!(h > 0.0)) {
    box.y0 -= 0.5 * w;
    h = w;
  }
  const double mx = 0.1 * w;
  const double my = 0.1 * h;
  return Window{Point(box.x0 - mx, box.y0 - my), Point(box.x0 + w + mx, box.y0 + h + my)};
}

std::string render_svg(const Scene& scene, const ToleranceProfile& tol) {
  const Window window = render_window(scene, tol);
  const Canvas canvas(window);

  std::vector<Evaluated> loci;
  std::vector<std::string> captions;
  std::vector<const TriangleDirective*> triangles;
  for (const auto& d : scene.directives) {
    if (const auto* l = std::get_if<LocusDirective>(&d)) {
      loci.push_back(evaluate(scene, *l, tol));
      captions.push_back(loci.back().caption);
    } else {
      const auto& t = std::get<TriangleDirective>(d);
      // Validates the vertices.
      [[maybe_unused]] const Triangle checked(scene.at(t.vertices[0]), scene.at(t.vertices[1]),
                                              scene.at(t.vertices[2]), tol);
      triangles.push_back(&t);
      captions.push_back("Triangle " + t.vertices[0] + t.vertices[1] + t.vertices[2]);
    }
  }

  std::string title;
  for (const auto& c : captions) title += (title.empty() ? "" : "; ") + c;
  if (title.empty()) title = "Scene";

  const std::string width = format_fixed6(kSvgWidth);
  const std::string height = format_fixed6(canvas.height());
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
         "\" viewBox=\"0.000000 0.000000 " + width + " " + height + "\">\n";
  out += "  <title>" + escape(title) + "</title>\n";

  out += "  <g id=\"loci\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\">\n";
  for (const auto& e : loci) {
    std::visit(overloaded{
                   [&](const Circle& c) {
                     out += "    <circle cx=\"" + canvas.x(c.center().x()) + "\" cy=\"" + canvas.y(c.center().y()) +
                            "\" r=\"" + format_fixed6(c.radius() * canvas.scale()) + "\"/>\n";
                   },
                   [&](const Line& l) {
                     const auto span = clip_to_box(l, window.min, window.max);
                     if (!span) return;
                     const Point p = l.at(span->first);
                     const Point q = l.at(span->second);
                     out += "    <line x1=\"" + canvas.x(p.x()) + "\" y1=\"" + canvas.y(p.y()) + "\" x2=\"" +
                            canvas.x(q.x()) + "\" y2=\"" + canvas.y(q.y()) + "\"/>\n";
                   },
                   [&](const SinglePoint& s) {
                     const double cx = canvas.px(s.point);
                     const double cy = canvas.py(s.point);
                     const double r = 2.0 * kMarkerHalf;
                     out += "    <path class=\"locus-point\" d=\"M " + format_fixed6(cx - r) + " " +
                            format_fixed6(cy - r) + " L " + format_fixed6(cx + r) + " " + format_fixed6(cy + r) +
                            " M " + format_fixed6(cx - r) + " " + format_fixed6(cy + r) + " L " +
                            format_fixed6(cx + r) + " " + format_fixed6(cy - r) + "\"/>\n";
                   },
                   [](const EmptyLocus&) {},
               },
               e.locus);
  }
  out += "  </g>\n";

  out += "  <g id=\"triangles\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\">\n";
  for (const auto* t : triangles) {
    out += "    <polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const Point v = scene.at(t->vertices[i]);
      out += (i ? " " : "") + canvas.x(v.x()) + "," + canvas.y(v.y());
    }
    out += "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"points\" fill=\"#c00000\">\n";
  for (const auto& p : scene.points) {
    out += "    <rect class=\"point\" x=\"" + format_fixed6(canvas.px(p.point) - kMarkerHalf) + "\" y=\"" +
           format_fixed6(canvas.py(p.point) - kMarkerHalf) + "\" width=\"" + format_fixed6(2 * kMarkerHalf) +
           "\" height=\"" + format_fixed6(2 * kMarkerHalf) + "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#000000\">\n";
  for (const auto& p : scene.points) {
    out += "    <text class=\"label\" x=\"" + format_fixed6(canvas.px(p.point) + kLabelOffset) + "\" y=\"" +
           format_fixed6(canvas.py(p.point) - kLabelOffset) + "\">" + escape(p.name) + "</text>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace loci
