#pragma once

// Static SVG figures. Output depends only on the inputs (fixed number
// formatting, no timestamps), so figures can be golden-file compared.

#include "rectihull/alpha.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/hull.hpp"
#include "rectihull/regions.hpp"

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rectihull::svg {

class Canvas {
public:
  Canvas(const Rect& world, double size_px = 600.0, double margin_px = 20.0)
      : world_(world), margin_(margin_px) {
    const double span = std::max({world.width(), world.height(), 1e-12});
    scale_ = size_px / span;
    width_ = world.width() * scale_ + 2 * margin_;
    height_ = world.height() * scale_ + 2 * margin_;
  }

  void begin(std::ostream& out) const {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\""
        << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
        << "\" fill=\"white\"/>\n";
  }
  void end(std::ostream& out) const { out << "</svg>\n"; }

  void polyline(std::ostream& out, std::span<const Point2> pts, bool closed, const std::string& style) const {
    out << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point2 q = map(pts[i]);
      out << (i ? " " : "") << num(q.x) << ',' << num(q.y);
    }
    if (pts.size() == 1) { // zero-length polyline so single points still render
      const Point2 q = map(pts[0]);
      out << ' ' << num(q.x) << ',' << num(q.y);
    }
    out << "\" " << style << "/>\n";
  }

  void dot(std::ostream& out, Point2 p, double r_px, const std::string& fill) const {
    const Point2 q = map(p);
    out << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"" << num(r_px)
        << "\" fill=\"" << fill << "\"/>\n";
  }

  void cell(std::ostream& out, Point2 lo, Point2 hi, const std::string& fill) const {
    const Point2 a = map({lo.x, hi.y}), b = map({hi.x, lo.y});
    out << "<rect x=\"" << num(a.x) << "\" y=\"" << num(a.y) << "\" width=\"" << num(b.x - a.x)
        << "\" height=\"" << num(b.y - a.y) << "\" fill=\"" << fill << "\"/>\n";
  }

  [[nodiscard]] Point2 map(Point2 p) const {
    return {margin_ + (p.x - world_.min.x) * scale_, margin_ + (world_.max.y - p.y) * scale_};
  }

  [[nodiscard]] static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000")
      s = "0.000";
    return s;
  }

private:
  Rect world_;
  double margin_;
  double scale_ = 1.0;
  double width_ = 0.0;
  double height_ = 0.0;
};

namespace detail {

inline Rect padded(const Rect& r) {
  const double pad = 0.05 * std::max({r.width(), r.height(), 1e-9});
  return r.inflated(pad);
}

inline void region_outline(std::ostream& out, const Canvas& c, const Region& r, bool hole) {
  const std::string style = hole ? "fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\""
                                 : "fill=\"none\" stroke=\"#888888\"";
  switch (r.kind()) {
  case Region::Kind::Rect: {
    const Rect& b = r.bounds();
    const std::vector<Point2> v{b.min, {b.max.x, b.min.y}, b.max, {b.min.x, b.max.y}};
    c.polyline(out, v, true, style);
    break;
  }
  case Region::Kind::Polygon:
  case Region::Kind::Triangle:
    c.polyline(out, r.polygon_shape()->vertices(), true, style);
    break;
  case Region::Kind::Disk: {
    std::vector<Point2> v;
    for (int k = 0; k < 128; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 128.0;
      v.push_back({r.center().x + r.radius() * std::cos(a), r.center().y + r.radius() * std::sin(a)});
    }
    c.polyline(out, v, true, style);
    break;
  }
  case Region::Kind::Union:
    for (const auto& ch : r.children())
      region_outline(out, c, ch, hole);
    break;
  case Region::Kind::Difference:
    region_outline(out, c, r.children().front(), hole);
    for (std::size_t i = 1; i < r.children().size(); ++i)
      region_outline(out, c, r.children()[i], !hole);
    break;
  }
}

inline void hull_layer(std::ostream& out, const Canvas& c, const BiconvexHull& h) {
  for (const auto& pl : h.boundary())
    c.polyline(out, pl.points, pl.closed,
               pl.closed ? "fill=\"#1f77b4\" fill-opacity=\"0.15\" stroke=\"#1f77b4\" stroke-width=\"1.5\""
                         : "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"");
}

} // namespace detail

/// Sample points (grey), hull boundary (blue) and extremal points (red).
inline void write_hull_svg(std::ostream& out, const BiconvexHull& h) {
  const Canvas c(detail::padded(bounding_box(h.points())));
  c.begin(out);
  detail::hull_layer(out, c, h);
  const auto& mask = h.extremal_mask();
  for (std::size_t i = 0; i < h.points().size(); ++i)
    c.dot(out, h.points()[i], mask[i] ? 2.5 : 1.5, mask[i] ? "#d62728" : "#555555");
  c.end(out);
}

/// Estimation figure: the true region (outline), the sample, the alpha
/// hull rasterized on `raster` x `raster` cells (orange) and the biconvex
/// hull boundary (blue).
inline void write_estimate_svg(std::ostream& out, const Region& region, std::span<const Point2> sample,
                               const BiconvexHull& hull, const AlphaHull* alpha, int raster = 120) {
  const Rect world = region.bounds();
  const Canvas c(detail::padded(world));
  c.begin(out);
  if (alpha) {
    const double dx = world.width() / raster, dy = world.height() / raster;
    for (int j = 0; j < raster; ++j) {
      int run = -1;
      for (int i = 0; i <= raster; ++i) {
        const bool in = i < raster && alpha->contains({world.min.x + (i + 0.5) * dx, world.min.y + (j + 0.5) * dy});
        if (in && run < 0)
          run = i;
        if (!in && run >= 0) {
          c.cell(out, {world.min.x + run * dx, world.min.y + j * dy},
                 {world.min.x + i * dx, world.min.y + (j + 1) * dy}, "#ff7f0e\" fill-opacity=\"0.25");
          run = -1;
        }
      }
    }
  }
  detail::region_outline(out, c, region, false);
  detail::hull_layer(out, c, hull);
  for (const auto& p : sample)
    c.dot(out, p, 1.2, "#333333");
  c.end(out);
}

} // namespace rectihull::svg
