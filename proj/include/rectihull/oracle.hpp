#pragma once

// Slow reference implementations of hull membership. These deliberately
// share nothing with hull.hpp beyond Point2 and Frame: they work straight
// from the quadrant definitions with plain loops.

#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"

#include <span>
#include <vector>

namespace rectihull::oracle {

/// x is a member iff, for each of the four sign patterns (sx, sy), some
/// sample point a has sx*(a1-x1) >= 0 and sy*(a2-x2) >= 0 in frame
/// coordinates. O(n) per query.
[[nodiscard]] inline bool naive_contains(std::span<const Point2> points, double theta, Point2 x) {
  if (points.empty())
    throw EmptySample("naive_contains needs at least one point");
  const Frame f = Frame::canonical(theta);
  const Point2 q = into_frame(x, f);
  constexpr int signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& s : signs) {
    bool found = false;
    for (const auto& p : points) {
      const Point2 a = into_frame(p, f);
      if (s[0] * (a.x - q.x) >= 0 && s[1] * (a.y - q.y) >= 0) {
        found = true;
        break;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

/// Rectangular lattice in frame coordinates: nodes lo + (i*h, j*h).
struct FrameGrid {
  Point2 lo;
  double h = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;

  [[nodiscard]] Point2 node(std::size_t i, std::size_t j) const {
    return {lo.x + static_cast<double>(i) * h, lo.y + static_cast<double>(j) * h};
  }
};

/// Marks of the literal-definition oracle. `removed[j * nx + i]` is true
/// when lattice node (i, j) lies in some open quadrant, with vertex at
/// another lattice node, that contains no sample point.
struct RemovedGrid {
  FrameGrid grid;
  std::vector<bool> removed;

  [[nodiscard]] bool at(std::size_t i, std::size_t j) const { return removed[j * grid.nx + i]; }
};

/// Literal form of the hull definition, discretized: every lattice node is
/// tried as the vertex of all four open quadrants; each quadrant that misses
/// the sample removes every lattice node in its closure (the vertex and the
/// rays included). `window` is a rectangle in frame coordinates. Converges
/// to the hull complement as h -> 0.
///
/// Closure matters: with open coverage only, a node whose quadrant is empty
/// but lies within one pitch of a sample point's axis-parallel ray can only
/// be reached from vertices whose quadrant catches that point, so it stays
/// unmarked even far from the hull boundary.
[[nodiscard]] inline RemovedGrid naive_vertex_grid_removed(std::span<const Point2> points, double theta,
                                                           const Rect& window, double h) {
  if (!(h > 0))
    throw std::invalid_argument("naive_vertex_grid_removed: h must be positive");
  const Frame f = Frame::canonical(theta);
  std::vector<Point2> a;
  for (const auto& p : points)
    a.push_back(into_frame(p, f));

  RemovedGrid out;
  out.grid.lo = window.min;
  out.grid.h = h;
  out.grid.nx = static_cast<std::size_t>(window.width() / h) + 1;
  out.grid.ny = static_cast<std::size_t>(window.height() / h) + 1;
  const std::size_t nx = out.grid.nx, ny = out.grid.ny;
  out.removed.assign(nx * ny, false);

  constexpr int signs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  std::vector<char> empty(nx * ny);
  std::vector<char> reach(nx * ny);
  for (const auto& s : signs) {
    const int sx = s[0], sy = s[1];
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        const Point2 y = out.grid.node(i, j);
        bool hit = false;
        for (const auto& p : a)
          if (sx * (p.x - y.x) > 0 && sy * (p.y - y.y) > 0) {
            hit = true;
            break;
          }
        empty[j * nx + i] = !hit;
      }
    // Node z is in the closed quadrant at vertex y iff y is weakly behind z
    // along both quadrant directions. With lattice indices flipped so the
    // quadrant points towards increasing (u, v), that is a 2-D prefix OR of
    // `empty` evaluated at z.
    auto cell = [&](std::size_t u, std::size_t v) {
      const std::size_t i = sx > 0 ? u : nx - 1 - u;
      const std::size_t j = sy > 0 ? v : ny - 1 - v;
      return j * nx + i;
    };
    std::vector<char> prefix(nx * ny);
    for (std::size_t v = 0; v < ny; ++v)
      for (std::size_t u = 0; u < nx; ++u) {
        char acc = empty[cell(u, v)];
        if (u > 0)
          acc |= prefix[v * nx + u - 1];
        if (v > 0)
          acc |= prefix[(v - 1) * nx + u];
        prefix[v * nx + u] = acc;
      }
    for (std::size_t v = 0; v < ny; ++v)
      for (std::size_t u = 0; u < nx; ++u)
        reach[cell(u, v)] = prefix[v * nx + u];
    for (std::size_t k = 0; k < nx * ny; ++k)
      if (reach[k])
        out.removed[k] = true;
  }
  return out;
}

/// Area estimate: count of lattice cell centers accepted by naive_contains,
/// times h^2. The lattice covers the frame-coordinate bounding box of the
/// sample. Error is of order h times the hull perimeter.
[[nodiscard]] inline double naive_area_grid(std::span<const Point2> points, double theta, double h) {
  if (points.empty())
    throw EmptySample("naive_area_grid needs at least one point");
  const Frame f = Frame::canonical(theta);
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& p : points) {
    const Point2 q = into_frame(p, f);
    x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
  }
  const auto nx = static_cast<std::size_t>(std::ceil((x1 - x0) / h));
  const auto ny = static_cast<std::size_t>(std::ceil((y1 - y0) / h));
  std::size_t count = 0;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const Point2 c{x0 + (static_cast<double>(i) + 0.5) * h, y0 + (static_cast<double>(j) + 0.5) * h};
      if (naive_contains(points, theta, out_of_frame(c, f)))
        ++count;
    }
  return static_cast<double>(count) * h * h;
}

} // namespace rectihull::oracle
