#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "qrtrap/error.hpp"
#include "qrtrap/qcmap.hpp"

namespace qrtrap::cli {
namespace {

struct Polyline {
  std::string cls;
  PlanePoint from;
  PlanePoint to;
  std::vector<PlanePoint> points;
};

struct Box {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -std::numeric_limits<double>::infinity();
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();

  void add(PlanePoint p) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string points_attr(const std::vector<PlanePoint>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += num(pts[i].x);
    s += ',';
    s += num(pts[i].y);
  }
  return s;
}

Polyline mapped_segment(const Trapezoid& t, PlanePoint a, PlanePoint b, int samples) {
  const PlanePoint mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  Polyline line{std::string(to_string(classify_region(t, mid).piece)), a, b, {}};
  line.points.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    const PlanePoint p = k == samples - 1 ? b : PlanePoint{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
    line.points.push_back(forward(t, p).output);
  }
  return line;
}

}  // namespace

std::string render_grid_svg(const Trapezoid& t, const SvgOptions& options) {
  if (options.lines < 1) {
    throw DomainError("grid density must be at least 1");
  }
  if (options.samples_per_segment < 64) {
    throw DomainError("each grid segment needs at least 64 samples");
  }
  const Window w = options.window.value_or(default_window(t));
  validate(w);

  const int n = options.lines;
  auto gx = [&](int i) { return w.x_min + w.width() * i / n; };
  auto gy = [&](int j) { return w.y_min + w.height() * j / n; };

  std::vector<Polyline> grid;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      grid.push_back(mapped_segment(t, {gx(i), gy(j)}, {gx(i), gy(j + 1)}, options.samples_per_segment));
    }
  }
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < n; ++i) {
      grid.push_back(mapped_segment(t, {gx(i), gy(j)}, {gx(i + 1), gy(j)}, options.samples_per_segment));
    }
  }

  // Boundary of the trapezoid, counter-clockwise from the bottom-left vertex.
  const std::vector<PlanePoint> corners{{-t.d(), 0.0}, {t.d(), 0.0}, {t.c(), 1.0}, {-t.c(), 1.0}};
  std::vector<Polyline> boundary;
  for (std::size_t k = 0; k < corners.size(); ++k) {
    Polyline edge = mapped_segment(t, corners[k], corners[(k + 1) % corners.size()], options.samples_per_segment);
    edge.cls = "boundary-image";
    boundary.push_back(std::move(edge));
  }

  Box box;
  for (const Polyline& line : grid) {
    for (const PlanePoint& p : line.points) {
      box.add(p);
    }
  }
  for (const PlanePoint& p : corners) {
    box.add(p);
  }
  const double pad = 0.05 * std::max(box.x_max - box.x_min, box.y_max - box.y_min);
  box.x_min -= pad;
  box.x_max += pad;
  box.y_min -= pad;
  box.y_max += pad;

  const double width_px = 1000.0;
  const double scale = width_px / (box.x_max - box.x_min);
  const double height_px = scale * (box.y_max - box.y_min);
  const double stroke = 1.0 / scale;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\" data-alpha=\"{}\" data-d=\"{}\" data-c=\"{}\">\n",
      num(width_px), num(height_px), num(width_px), num(height_px), num(t.alpha()), num(t.d()),
      num(t.c()));
  s += "<style type=\"text/css\"><![CDATA[\n"
       "polyline, polygon { fill: none; }\n"
       ".G1 { stroke: #1f77b4; } .G2 { stroke: #ff7f0e; } .G3 { stroke: #2ca02c; }\n"
       ".G4 { stroke: #d62728; } .G5 { stroke: #9467bd; }\n"
       ".trapezoid { stroke: #000000; stroke-dasharray: 0.05 0.05; }\n"
       ".rectangle { stroke: #000000; }\n"
       ".boundary-image { stroke: #000000; }\n"
       "]]></style>\n";
  // Mathematical coordinates inside; y grows upwards.
  s += fmt::format("<g transform=\"matrix({} 0 0 {} {} {})\" stroke-width=\"{}\">\n", num(scale),
                   num(-scale), num(-scale * box.x_min), num(scale * box.y_max), num(stroke));
  for (const Polyline& line : grid) {
    s += fmt::format(
        "<polyline class=\"{}\" data-x0=\"{}\" data-y0=\"{}\" data-x1=\"{}\" data-y1=\"{}\" points=\"{}\"/>\n",
        line.cls, num(line.from.x), num(line.from.y), num(line.to.x), num(line.to.y),
        points_attr(line.points));
  }
  s += fmt::format("<polygon class=\"trapezoid\" points=\"{}\"/>\n", points_attr(corners));
  const std::vector<PlanePoint> rect{{-t.d(), 0.0}, {t.d(), 0.0}, {t.d(), 1.0}, {-t.d(), 1.0}};
  s += fmt::format("<polygon class=\"rectangle\" points=\"{}\"/>\n", points_attr(rect));
  for (const Polyline& edge : boundary) {
    s += fmt::format(
        "<polyline class=\"{}\" data-x0=\"{}\" data-y0=\"{}\" data-x1=\"{}\" data-y1=\"{}\" points=\"{}\"/>\n",
        edge.cls, num(edge.from.x), num(edge.from.y), num(edge.to.x), num(edge.to.y),
        points_attr(edge.points));
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace qrtrap::cli
