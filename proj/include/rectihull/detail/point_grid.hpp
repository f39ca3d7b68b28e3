#pragma once

#include "rectihull/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace rectihull::detail {

// Uniform bucket grid for nearest-neighbour distance queries on a static
// point set. Buckets are searched in square rings around the query cell
// until the ring is farther than the best distance found.
class PointGrid {
public:
  explicit PointGrid(std::span<const Point2> pts, double target_per_cell = 2.0) {
    if (pts.empty())
      return;
    box_ = bounding_box(pts);
    const double w = std::max(box_.width(), 1e-12), h = std::max(box_.height(), 1e-12);
    const double cells = std::max(1.0, static_cast<double>(pts.size()) / target_per_cell);
    cell_ = std::max(std::sqrt(w * h / cells), std::max(w, h) / cells);
    nx_ = std::max<long>(1, static_cast<long>(w / cell_) + 1);
    ny_ = std::max<long>(1, static_cast<long>(h / cell_) + 1);
    std::vector<std::size_t> count(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
    for (const auto& p : pts)
      ++count[index(cx(p.x), cy(p.y)) + 1];
    for (std::size_t i = 1; i < count.size(); ++i)
      count[i] += count[i - 1];
    start_ = count;
    pts_.resize(pts.size());
    for (const auto& p : pts)
      pts_[count[index(cx(p.x), cy(p.y))]++] = p;
  }

  [[nodiscard]] bool empty() const noexcept { return pts_.empty(); }

  /// Distance from q to the nearest stored point (+inf when empty).
  [[nodiscard]] double nearest_distance(Point2 q) const {
    double best2 = std::numeric_limits<double>::infinity();
    if (pts_.empty())
      return best2;
    const long qx = cx(q.x), qy = cy(q.y);
    const long max_ring = std::max({qx, nx_ - 1 - qx, qy, ny_ - 1 - qy, 0L});
    // Ring minima of the cell distance are nondecreasing, also for queries
    // outside the grid (their cell index is clamped to the border).
    for (long ring = 0; ring <= max_ring; ++ring) {
      double ring_min2 = std::numeric_limits<double>::infinity();
      for (long j = qy - ring; j <= qy + ring; ++j) {
        if (j < 0 || j >= ny_)
          continue;
        const bool edge_row = (j == qy - ring || j == qy + ring);
        const long step = (edge_row || ring == 0) ? 1 : 2 * ring;
        for (long i = qx - ring; i <= qx + ring; i += step) {
          if (i < 0 || i >= nx_)
            continue;
          const double d2 = cell_distance2(q, i, j);
          ring_min2 = std::min(ring_min2, d2);
          if (d2 < best2)
            scan(index(i, j), q, best2);
        }
      }
      if (ring_min2 > best2)
        break;
    }
    return std::sqrt(best2);
  }

private:
  [[nodiscard]] long cx(double x) const {
    return std::clamp(static_cast<long>(std::floor((x - box_.min.x) / cell_)), 0L, nx_ - 1);
  }
  [[nodiscard]] long cy(double y) const {
    return std::clamp(static_cast<long>(std::floor((y - box_.min.y) / cell_)), 0L, ny_ - 1);
  }
  [[nodiscard]] std::size_t index(long i, long j) const {
    return static_cast<std::size_t>(j * nx_ + i);
  }

  [[nodiscard]] double cell_distance2(Point2 q, long i, long j) const {
    const double x_lo = box_.min.x + static_cast<double>(i) * cell_;
    const double y_lo = box_.min.y + static_cast<double>(j) * cell_;
    const double dx = std::max({x_lo - q.x, 0.0, q.x - (x_lo + cell_)});
    const double dy = std::max({y_lo - q.y, 0.0, q.y - (y_lo + cell_)});
    return dx * dx + dy * dy;
  }

  void scan(std::size_t cell, Point2 q, double& best2) const {
    for (std::size_t k = start_[cell]; k < start_[cell + 1]; ++k) {
      const double dx = pts_[k].x - q.x, dy = pts_[k].y - q.y;
      best2 = std::min(best2, dx * dx + dy * dy);
    }
  }

  Rect box_{};
  double cell_ = 1.0;
  long nx_ = 1;
  long ny_ = 1;
  std::vector<std::size_t> start_;
  std::vector<Point2> pts_;
};

} // namespace rectihull::detail
