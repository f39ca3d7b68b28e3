#pragma once

// Set distances: Hausdorff distance and distance in measure (area of the
// symmetric difference), discretized where the sets are continuous.

#include "rectihull/alpha.hpp"
#include "rectihull/detail/point_grid.hpp"
#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/hull.hpp"
#include "rectihull/random.hpp"
#include "rectihull/regions.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace rectihull {

/// A closed planar set given by its membership predicate, a window known to
/// contain it, and optionally curves lying in the set (used to keep thin
/// features visible after discretization).
struct MembershipFn {
  std::function<bool(Point2)> contains;
  Rect window;
  std::vector<Polyline> curves;
};

[[nodiscard]] inline MembershipFn membership_of(const BiconvexHull& h) {
  auto shared = std::make_shared<const BiconvexHull>(h);
  std::vector<Polyline> curves = h.boundary();
  for (const auto& p : h.points())
    curves.push_back({{p}, false});
  return {[shared](Point2 p) { return shared->contains(p); }, bounding_box(h.points()),
          std::move(curves)};
}

[[nodiscard]] inline MembershipFn membership_of(const Region& r) {
  return {[r](Point2 p) { return r.contains(p); }, r.bounds(), {}};
}

[[nodiscard]] inline MembershipFn membership_of(const AlphaHull& a) {
  auto shared = std::make_shared<const AlphaHull>(a);
  return {[shared](Point2 p) { return shared->contains(p); }, bounding_box(a.query().points), {}};
}

struct DistanceEstimate {
  double value = 0.0;
  /// Half-width of the discretization or statistical uncertainty.
  double error_bound = 0.0;
};

/// Exact Hausdorff distance between finite sets, brute force.
[[nodiscard]] inline DistanceEstimate hausdorff_points(std::span<const Point2> a,
                                                       std::span<const Point2> b) {
  if (a.empty() || b.empty())
    throw EmptySet("hausdorff_points needs two nonempty sets");
  auto directed = [](std::span<const Point2> from, std::span<const Point2> to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = INFINITY;
      for (const auto& q : to)
        best = std::min(best, distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return {std::max(directed(a, b), directed(b, a)), 0.0};
}

namespace detail {

/// Lattice nodes origin + (i*h, j*h) inside `window`.
inline std::vector<Point2> lattice(const Rect& window, double h) {
  const auto nx = static_cast<std::size_t>(std::floor(window.width() / h + 1e-9)) + 1;
  const auto ny = static_cast<std::size_t>(std::floor(window.height() / h + 1e-9)) + 1;
  std::vector<Point2> out;
  out.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      out.push_back({window.min.x + static_cast<double>(i) * h,
                     window.min.y + static_cast<double>(j) * h});
  return out;
}

/// Lattice members of f plus its curves resampled at pitch h.
inline std::vector<Point2> discretize(const MembershipFn& f, const Rect& window, double h) {
  std::vector<Point2> out;
  for (const auto& p : lattice(window, h))
    if (f.contains(p))
      out.push_back(p);
  for (const auto& pl : f.curves) {
    const auto& v = pl.points;
    const std::size_t segs = pl.closed ? v.size() : (v.empty() ? 0 : v.size() - 1);
    if (v.size() == 1)
      out.push_back(v.front());
    for (std::size_t i = 0; i < segs; ++i) {
      const Point2 a = v[i], b = v[(i + 1) % v.size()];
      const auto steps = static_cast<std::size_t>(std::ceil(distance(a, b) / h));
      for (std::size_t s = 0; s <= steps; ++s)
        out.push_back(a + (steps ? static_cast<double>(s) / static_cast<double>(steps) : 0.0) * (b - a));
    }
  }
  return out;
}

inline double directed(std::span<const Point2> from, std::span<const Point2> to) {
  const PointGrid index(to);
  double worst = 0.0;
  for (const auto& p : from)
    worst = std::max(worst, index.nearest_distance(p));
  return worst;
}

} // namespace detail

/// Discretized d_H(r, pts) for pts inside r: the largest distance from a
/// member of r (lattice of pitch h over its window) to the point set.
/// Error bound h*sqrt(2).
[[nodiscard]] inline DistanceEstimate hausdorff_region_points(const MembershipFn& r,
                                                              std::span<const Point2> pts, double h) {
  if (!(h > 0))
    throw std::invalid_argument("grid pitch must be positive");
  if (pts.empty())
    throw EmptySet("hausdorff_region_points needs sample points");
  const auto members = detail::discretize(r, r.window, h);
  if (members.empty())
    throw EmptySet("region has no lattice members at this pitch");
  return {detail::directed(members, pts), h * std::numbers::sqrt2};
}

/// Discretized symmetric Hausdorff distance between two sets, both sampled on
/// one common lattice. Error bound 2*h*sqrt(2).
[[nodiscard]] inline DistanceEstimate hausdorff_memberships(const MembershipFn& f,
                                                            const MembershipFn& g, double h) {
  if (!(h > 0))
    throw std::invalid_argument("grid pitch must be positive");
  const Rect window = f.window.united(g.window);
  const auto a = detail::discretize(f, window, h);
  const auto b = detail::discretize(g, window, h);
  if (a.empty() || b.empty())
    throw EmptySet("hausdorff_memberships: a set has no lattice members");
  return {std::max(detail::directed(a, b), detail::directed(b, a)),
          2.0 * h * std::numbers::sqrt2};
}

/// Monte Carlo area of the symmetric difference inside `window`;
/// error_bound is one standard error.
[[nodiscard]] inline DistanceEstimate dmu_mc(const MembershipFn& f, const MembershipFn& g,
                                             const Rect& window, std::size_t mc_n,
                                             std::uint64_t seed) {
  if (mc_n < 1000)
    throw std::invalid_argument("dmu_mc needs mc_n >= 1000");
  CounterRng rng(seed, stream::kMeasure);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < mc_n; ++i) {
    const double x = rng.uniform(window.min.x, window.max.x);
    const double y = rng.uniform(window.min.y, window.max.y);
    if (f.contains({x, y}) != g.contains({x, y}))
      ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(mc_n);
  const double a = window.area();
  return {a * p, a * std::sqrt(p * (1 - p) / static_cast<double>(mc_n))};
}

} // namespace rectihull
