#include "gtclust/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "gtclust/clustering.hpp"
#include "gtclust/errors.hpp"

namespace gtclust {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 28.0;
constexpr double kPointRadius = 3.0;

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_scatter_svg(const std::vector<Point>& points,
                               const std::vector<int>& labels,
                               const std::vector<int>& center_indices) {
  if (points.size() != labels.size()) {
    throw Error("svg render: points and labels differ in length");
  }
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  if (!points.empty()) {
    min_x = max_x = points[0].x;
    min_y = max_y = points[0].y;
    for (const Point& p : points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  const double x_off = kMargin + 0.5 * ((kCanvas - 2.0 * kMargin) - scale * (max_x - min_x));
  const double y_off = kMargin + 0.5 * ((kCanvas - 2.0 * kMargin) - scale * (max_y - min_y));
  auto to_px = [&](const Point& p) {
    // SVG y axis grows downward.
    return Point{x_off + scale * (p.x - min_x), kCanvas - (y_off + scale * (p.y - min_y))};
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point px = to_px(points[i]);
    const int label = labels[i];
    svg += "<circle cx=\"" + fmt(px.x) + "\" cy=\"" + fmt(px.y) + "\" r=\"" +
           fmt(kPointRadius) + "\" ";
    if (label == kNoiseLabel) {
      svg += "fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    } else {
      const char* color = kPalette[static_cast<std::size_t>(label) % kPalette.size()];
      svg += std::string("fill=\"") + color + "\"/>\n";
    }
  }
  for (const int c : center_indices) {
    if (c < 0 || static_cast<std::size_t>(c) >= points.size()) continue;
    const Point px = to_px(points[static_cast<std::size_t>(c)]);
    svg += "<circle cx=\"" + fmt(px.x) + "\" cy=\"" + fmt(px.y) + "\" r=\"" +
           fmt(kPointRadius + 2.5) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gtclust
