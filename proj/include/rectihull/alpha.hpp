#pragma once

// Approximate alpha-convex hull membership, the comparison baseline.
//
// x is outside the alpha-convex hull iff some open ball of radius alpha
// containing x misses the sample, i.e. iff some center c with |c - x| < alpha
// has d(c, A) >= alpha. Centers are searched on a polar grid around x (plus
// c = x). The grid search is exact on the grid; since d(., A) is 1-Lipschitz
// whole blocks of the grid are discarded when d(c0, A) + radius < alpha.

#include "rectihull/detail/point_grid.hpp"
#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/random.hpp"
#include "rectihull/regions.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace rectihull {

struct AlphaHullQuery {
  std::vector<Point2> points;
  double alpha = 1.0;
  std::size_t center_grid = 128;
};

class AlphaHull {
public:
  explicit AlphaHull(AlphaHullQuery q)
      : q_(std::move(q)), index_(std::make_shared<detail::PointGrid>(q_.points)) {
    if (q_.points.empty())
      throw EmptySample("alpha hull needs at least one point");
    if (!(q_.alpha > 0))
      throw std::invalid_argument("alpha must be positive");
    if (q_.center_grid < 64)
      throw std::invalid_argument("center_grid must be at least 64");
    reach_ = q_.alpha * (1.0 - 1e-6);
  }

  [[nodiscard]] const AlphaHullQuery& query() const noexcept { return q_; }

  /// Grid pitch of the candidate centers (outermost ring spacing).
  [[nodiscard]] double grid_pitch() const {
    const double g = static_cast<double>(q_.center_grid);
    return std::max(reach_ / g, 2.0 * std::numbers::pi * reach_ / g);
  }

  [[nodiscard]] bool contains(Point2 x) const {
    if (index_->nearest_distance(x) >= q_.alpha)
      return false;
    const long g = static_cast<long>(q_.center_grid);
    return !excluded(x, 0, g, 0, g);
  }

private:
  // Candidate (i, j): radius reach*(i+1)/G, angle 2*pi*j/G.
  [[nodiscard]] double radius(long i) const {
    return reach_ * static_cast<double>(i + 1) / static_cast<double>(q_.center_grid);
  }
  [[nodiscard]] double angle(long j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q_.center_grid);
  }

  // True iff some candidate in [i0,i1) x [j0,j1) is an excluding center.
  [[nodiscard]] bool excluded(Point2 x, long i0, long i1, long j0, long j1) const {
    const long im = (i0 + i1 - 1) / 2, jm = (j0 + j1 - 1) / 2;
    const double rm = radius(im), am = angle(jm);
    const Point2 c{x.x + rm * std::cos(am), x.y + rm * std::sin(am)};
    const double f = index_->nearest_distance(c);
    if (i1 - i0 == 1 && j1 - j0 == 1)
      return f >= q_.alpha;
    const double dr = std::max(rm - radius(i0), radius(i1 - 1) - rm);
    const double da = std::max(am - angle(j0), angle(j1 - 1) - am);
    if (f + dr + rm * da < q_.alpha)
      return false;
    if (f >= q_.alpha)
      return true;
    // Split the longer side.
    if (radius(i1 - 1) - radius(i0) >= rm * (angle(j1 - 1) - angle(j0)) && i1 - i0 > 1) {
      const long mid = (i0 + i1) / 2;
      return excluded(x, mid, i1, j0, j1) || excluded(x, i0, mid, j0, j1);
    }
    if (j1 - j0 > 1) {
      const long mid = (j0 + j1) / 2;
      return excluded(x, i0, i1, j0, mid) || excluded(x, i0, i1, mid, j1);
    }
    const long mid = (i0 + i1) / 2;
    return excluded(x, mid, i1, j0, j1) || excluded(x, i0, mid, j0, j1);
  }

  AlphaHullQuery q_;
  std::shared_ptr<const detail::PointGrid> index_;
  double reach_ = 0.0;
};

[[nodiscard]] inline bool alpha_contains(const AlphaHullQuery& q, Point2 x) {
  return AlphaHull(q).contains(x);
}

/// Monte Carlo area of the alpha hull inside `window`.
[[nodiscard]] inline AreaEstimate alpha_indicator_area(const AlphaHull& hull, const Rect& window,
                                                       std::size_t mc_n, std::uint64_t seed) {
  if (mc_n == 0)
    throw std::invalid_argument("alpha_indicator_area needs mc_n > 0");
  CounterRng rng(seed, stream::kAlphaArea);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < mc_n; ++i) {
    const double x = rng.uniform(window.min.x, window.max.x);
    const double y = rng.uniform(window.min.y, window.max.y);
    if (hull.contains({x, y}))
      ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(mc_n);
  const double a = window.area();
  return {a * p, a * std::sqrt(p * (1 - p) / static_cast<double>(mc_n)), false};
}

[[nodiscard]] inline AreaEstimate alpha_indicator_area(const AlphaHullQuery& q, const Rect& window,
                                                       std::size_t mc_n, std::uint64_t seed) {
  return alpha_indicator_area(AlphaHull(q), window, mc_n, seed);
}

} // namespace rectihull
