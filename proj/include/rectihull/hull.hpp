#pragma once

// Exact theta-biconvex (rectilinear convex) hull of a finite point set.
//
// Working in the frame (b1, b2), a point x belongs to the hull iff for each of
// the four quadrant orientations some sample point closed-dominates x:
//
//   NE: a1 >= x1 && a2 >= x2      NW: a1 <= x1 && a2 >= x2
//   SW: a1 <= x1 && a2 <= x2      SE: a1 >= x1 && a2 <= x2
//
// x fails one of these exactly when it lies in an open quadrant of that
// orientation which misses the sample, so the hull is the intersection of
// the complements of all empty open quadrants. Each condition is a bound
// on x2 given by a staircase (Pareto envelope) of the sample, and the hull
// decomposes into vertical slabs between consecutive distinct abscissae
// plus the vertical columns sitting at those abscissae.

#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace rectihull {

/// Quadrant direction in frame coordinates: (+,+), (-,+), (-,-), (+,-).
enum class Orientation : int { NE = 0, NW = 1, SW = 2, SE = 3 };

inline constexpr std::array<Orientation, 4> kOrientations{Orientation::NE, Orientation::NW,
                                                          Orientation::SW, Orientation::SE};

/// Sign of the first and second frame coordinate pointing into the quadrant.
[[nodiscard]] constexpr int sign_x(Orientation o) {
  return (o == Orientation::NE || o == Orientation::SE) ? 1 : -1;
}
[[nodiscard]] constexpr int sign_y(Orientation o) {
  return (o == Orientation::NE || o == Orientation::NW) ? 1 : -1;
}

/// True iff `a` closed-dominates `x` in orientation `o`.
[[nodiscard]] constexpr bool dominates(Point2 a, Point2 x, Orientation o) {
  return sign_x(o) * (a.x - x.x) >= 0 && sign_y(o) * (a.y - x.y) >= 0;
}

namespace detail {

/// Indices of the Pareto-maximal points in orientation `o`: points that no
/// other point (with different coordinates) closed-dominates. Exact
/// duplicates share their status.
inline std::vector<std::size_t> pareto_indices(std::span<const Point2> pts, Orientation o) {
  const int sx = sign_x(o), sy = sign_y(o);
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Farthest along the quadrant direction first.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double xi = sx * pts[i].x, xj = sx * pts[j].x;
    if (xi != xj)
      return xi > xj;
    return sy * pts[i].y > sy * pts[j].y;
  });

  std::vector<std::size_t> maxima;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t g = 0;
  while (g < order.size()) {
    const double gx = sx * pts[order[g]].x;
    const double gy = sy * pts[order[g]].y; // group maximum, by sort order
    std::size_t e = g;
    while (e < order.size() && sx * pts[order[e]].x == gx)
      ++e;
    if (gy > best)
      for (std::size_t k = g; k < e && sy * pts[order[k]].y == gy; ++k)
        maxima.push_back(order[k]);
    best = std::max(best, gy);
    g = e;
  }
  return maxima;
}

/// mask[i] is true when the open quadrant of orientation `o` at point i
/// holds no sample point (weak Pareto maximality). This is a superset of
/// pareto_indices: points on a flat stretch of a staircase qualify too.
inline std::vector<bool> open_quadrant_empty(std::span<const Point2> pts, Orientation o) {
  const int sx = sign_x(o), sy = sign_y(o);
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sx * pts[i].x > sx * pts[j].x; });
  std::vector<bool> mask(pts.size(), false);
  double beyond = -std::numeric_limits<double>::infinity(); // max sy*y strictly farther along x
  std::size_t g = 0;
  while (g < order.size()) {
    std::size_t e = g;
    double group = -std::numeric_limits<double>::infinity();
    while (e < order.size() && sx * pts[order[e]].x == sx * pts[order[g]].x)
      group = std::max(group, sy * pts[order[e++]].y);
    for (std::size_t k = g; k < e; ++k)
      mask[order[k]] = sy * pts[order[k]].y >= beyond;
    beyond = std::max(beyond, group);
    g = e;
  }
  return mask;
}

} // namespace detail

/// Monotone staircase bounding the second frame coordinate for one quadrant
/// orientation. NE and NW are upper envelopes, SW and SE lower ones.
///
/// `value_at(x)` is the closed-dominance extremum:
///   NE: max{a2 : a1 >= x}   NW: max{a2 : a1 <= x}
///   SW: min{a2 : a1 <= x}   SE: min{a2 : a1 >= x}
/// and is -inf (upper) or +inf (lower) when the set is empty.
class StepEnvelope {
public:
  enum class Kind { Upper, Lower };

  StepEnvelope(Orientation o, std::vector<Point2> vertices, double domain_lo, double domain_hi)
      : orientation_(o), vertices_(std::move(vertices)), lo_(domain_lo), hi_(domain_hi) {
    std::sort(vertices_.begin(), vertices_.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  [[nodiscard]] Orientation orientation() const noexcept { return orientation_; }
  [[nodiscard]] Kind kind() const noexcept {
    return sign_y(orientation_) > 0 ? Kind::Upper : Kind::Lower;
  }
  /// Staircase corners (the Pareto maxima), sorted by first coordinate.
  [[nodiscard]] std::span<const Point2> vertices() const noexcept { return vertices_; }
  [[nodiscard]] double domain_lo() const noexcept { return lo_; }
  [[nodiscard]] double domain_hi() const noexcept { return hi_; }

  [[nodiscard]] double value_at(double x) const {
    const bool forward = sign_x(orientation_) > 0; // condition a1 >= x
    const double empty = kind() == Kind::Upper ? -std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::infinity();
    if (forward) {
      auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                                 [](Point2 v, double t) { return v.x < t; });
      return it == vertices_.end() ? empty : it->y;
    }
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x,
                               [](double t, Point2 v) { return t < v.x; });
    return it == vertices_.begin() ? empty : std::prev(it)->y;
  }

  /// Strictly increasing breakpoints x0 < ... < xk spanning the domain.
  /// A degenerate domain yields a single breakpoint.
  [[nodiscard]] std::vector<double> breakpoints() const {
    std::vector<double> xs{lo_};
    for (const auto& v : vertices_)
      xs.push_back(v.x);
    xs.push_back(hi_);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  /// values()[j] is the envelope on the open piece (x_j, x_{j+1}); for a
  /// degenerate domain, the single value at that abscissa.
  [[nodiscard]] std::vector<double> values() const {
    const auto xs = breakpoints();
    if (xs.size() == 1)
      return {value_at(xs.front())};
    std::vector<double> vs;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j)
      vs.push_back(value_at(0.5 * (xs[j] + xs[j + 1])));
    return vs;
  }

private:
  Orientation orientation_;
  std::vector<Point2> vertices_;
  double lo_;
  double hi_;
};

/// Staircase of `points_in_frame` for orientation `o`.
[[nodiscard]] inline StepEnvelope pareto_staircase(std::span<const Point2> points_in_frame,
                                                   Orientation o) {
  if (points_in_frame.empty())
    throw EmptySample("pareto_staircase needs at least one point");
  std::vector<Point2> verts;
  for (std::size_t i : detail::pareto_indices(points_in_frame, o))
    verts.push_back(points_in_frame[i]);
  const auto [lo, hi] = std::minmax_element(points_in_frame.begin(), points_in_frame.end(),
                                            [](Point2 a, Point2 b) { return a.x < b.x; });
  return StepEnvelope(o, std::move(verts), lo->x, hi->x);
}

/// Open vertical slab (x_lo, x_hi) of the hull in frame coordinates. The
/// section is [lower, upper], empty when upper < lower.
struct Slab {
  double x_lo;
  double x_hi;
  double lower;
  double upper;

  [[nodiscard]] double area() const { return (x_hi - x_lo) * std::max(0.0, upper - lower); }
};

/// Vertical section of the hull at one sample abscissa (always nonempty).
struct Column {
  double x;
  double lower;
  double upper;
};

/// A boundary curve in world coordinates. Closed polylines do not repeat
/// their first vertex. Zero-width features (whiskers, segments) are traced
/// out and back.
struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

class BiconvexHull;
BiconvexHull build_hull(std::span<const Point2> points, const Frame& frame);

class BiconvexHull {
public:
  [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
  [[nodiscard]] double theta() const noexcept { return frame_.theta(); }
  [[nodiscard]] std::span<const Point2> points() const noexcept { return points_; }
  [[nodiscard]] std::span<const Point2> points_in_frame() const noexcept { return frame_points_; }
  [[nodiscard]] const StepEnvelope& envelope(Orientation o) const {
    return envelopes_[static_cast<int>(o)];
  }
  [[nodiscard]] std::span<const Slab> slabs() const noexcept { return slabs_; }
  [[nodiscard]] std::span<const Column> columns() const noexcept { return columns_; }
  [[nodiscard]] const std::vector<bool>& extremal_mask() const noexcept { return extremal_; }

  /// Closed membership of a world point, tolerance `tol` in frame coordinates.
  [[nodiscard]] bool contains(Point2 p, double tol = kBoundaryTol) const {
    return contains_in_frame(into_frame(p, frame_), tol);
  }

  [[nodiscard]] bool contains_in_frame(Point2 q, double tol = kBoundaryTol) const {
    for (const auto& env : envelopes_) {
      const Orientation o = env.orientation();
      const double sx = sign_x(o), sy = sign_y(o);
      // Shifting the query by tol against the quadrant direction relaxes
      // both dominance comparisons by tol.
      const double bound = env.value_at(q.x - sx * tol);
      if (sy * (q.y - sy * tol) > sy * bound)
        return false;
    }
    return true;
  }

  /// Lebesgue measure: exact slab sum.
  [[nodiscard]] double area() const {
    double a = 0.0;
    for (const auto& s : slabs_)
      a += s.area();
    return a;
  }

  [[nodiscard]] std::vector<Polyline> boundary() const;

  [[nodiscard]] std::vector<std::size_t> extremal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < extremal_.size(); ++i)
      if (extremal_[i])
        out.push_back(i);
    return out;
  }

  [[nodiscard]] std::vector<Point2> extremal_points() const {
    std::vector<Point2> out;
    for (std::size_t i : extremal_indices())
      out.push_back(points_[i]);
    return out;
  }

private:
  friend BiconvexHull build_hull(std::span<const Point2> points, const Frame& frame);

  BiconvexHull(Frame f, std::vector<Point2> pts, std::vector<Point2> fpts,
               std::array<StepEnvelope, 4> envs)
      : frame_(f), points_(std::move(pts)), frame_points_(std::move(fpts)),
        envelopes_(std::move(envs)) {}

  Frame frame_;
  std::vector<Point2> points_;
  std::vector<Point2> frame_points_;
  std::array<StepEnvelope, 4> envelopes_;
  std::vector<Slab> slabs_;
  std::vector<Column> columns_;
  std::vector<bool> extremal_;
};

/// Hull in an explicit frame; the angle is used as given, not reduced.
inline BiconvexHull build_hull(std::span<const Point2> points, const Frame& frame) {
  if (points.empty())
    throw EmptySample("build_hull needs at least one point");
  for (const auto& p : points)
    if (!is_finite(p))
      throw std::invalid_argument("build_hull: point coordinates must be finite");

  std::vector<Point2> fpts = into_frame(points, frame);
  std::array<StepEnvelope, 4> envs{
      pareto_staircase(fpts, Orientation::NE), pareto_staircase(fpts, Orientation::NW),
      pareto_staircase(fpts, Orientation::SW), pareto_staircase(fpts, Orientation::SE)};
  BiconvexHull h(frame, std::vector<Point2>(points.begin(), points.end()), fpts, std::move(envs));

  h.extremal_.assign(points.size(), false);
  for (Orientation o : kOrientations) {
    const auto empty = detail::open_quadrant_empty(fpts, o);
    for (std::size_t i = 0; i < empty.size(); ++i)
      h.extremal_[i] = h.extremal_[i] || empty[i];
  }

  // Prefix (a1 <= c) and suffix (a1 >= c) extrema over distinct abscissae.
  std::vector<Point2> sorted = fpts;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<double> xs, gmin, gmax;
  for (const auto& p : sorted) {
    if (xs.empty() || p.x != xs.back()) {
      xs.push_back(p.x);
      gmin.push_back(p.y);
      gmax.push_back(p.y);
    } else {
      gmin.back() = std::min(gmin.back(), p.y);
      gmax.back() = std::max(gmax.back(), p.y);
    }
  }
  const std::size_t k = xs.size();
  std::vector<double> le_min(k), le_max(k), ge_min(k), ge_max(k);
  for (std::size_t j = 0; j < k; ++j) {
    le_min[j] = j ? std::min(le_min[j - 1], gmin[j]) : gmin[j];
    le_max[j] = j ? std::max(le_max[j - 1], gmax[j]) : gmax[j];
  }
  for (std::size_t j = k; j-- > 0;) {
    ge_min[j] = j + 1 < k ? std::min(ge_min[j + 1], gmin[j]) : gmin[j];
    ge_max[j] = j + 1 < k ? std::max(ge_max[j + 1], gmax[j]) : gmax[j];
  }
  for (std::size_t j = 0; j < k; ++j)
    h.columns_.push_back({xs[j], std::max(le_min[j], ge_min[j]), std::min(le_max[j], ge_max[j])});
  for (std::size_t j = 1; j < k; ++j)
    h.slabs_.push_back({xs[j - 1], xs[j], std::max(ge_min[j], le_min[j - 1]),
                        std::min(ge_max[j], le_max[j - 1])});
  return h;
}

/// Hull for a biconvexity angle; theta is reduced modulo pi/2.
inline BiconvexHull build_hull(std::span<const Point2> points, double theta) {
  return build_hull(points, Frame::canonical(theta));
}

namespace detail {

// Boundary tracing treats features thinner than the membership tolerance
// as zero-width, matching `contains`.
inline bool near(Point2 a, Point2 b) {
  return std::abs(a.x - b.x) <= kBoundaryTol && std::abs(a.y - b.y) <= kBoundaryTol;
}

inline void drop_repeats(std::vector<Point2>& pts, bool cyclic) {
  pts.erase(std::unique(pts.begin(), pts.end(), near), pts.end());
  if (cyclic)
    while (pts.size() > 1 && near(pts.front(), pts.back()))
      pts.pop_back();
}

// Removes vertices in the middle of a straight run; turn-backs are kept.
inline void drop_straight(std::vector<Point2>& pts, bool cyclic) {
  bool changed = true;
  while (changed && pts.size() > 2) {
    changed = false;
    const std::size_t n = pts.size();
    for (std::size_t i = cyclic ? 0 : 1; i < (cyclic ? n : n - 1); ++i) {
      const Point2 a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
      const double span = norm(b - a) + norm(c - b);
      if (std::abs(cross(b - a, c - b)) <= kBoundaryTol * span && dot(b - a, c - b) > 0.0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

} // namespace detail

inline std::vector<Polyline> BiconvexHull::boundary() const {
  std::vector<Polyline> out;
  const std::size_t k = columns_.size();
  std::size_t s = 0;
  while (s < k) {
    // Extend the component while the slab to the right is nonempty.
    std::size_t e = s;
    bool fat = false;
    while (e + 1 < k && slabs_[e].upper >= slabs_[e].lower - kBoundaryTol) {
      fat = fat || slabs_[e].upper > slabs_[e].lower + kBoundaryTol;
      ++e;
    }

    std::vector<Point2> tour;
    tour.push_back({columns_[s].x, columns_[s].lower});
    tour.push_back({columns_[s].x, columns_[s].upper});
    for (std::size_t j = s + 1; j <= e; ++j) {
      const Slab& sl = slabs_[j - 1];
      tour.push_back({sl.x_lo, sl.upper});
      tour.push_back({sl.x_hi, sl.upper});
      tour.push_back({columns_[j].x, columns_[j].upper});
    }
    tour.push_back({columns_[e].x, columns_[e].lower});
    for (std::size_t j = e; j > s; --j) {
      const Slab& sl = slabs_[j - 1];
      tour.push_back({sl.x_hi, sl.lower});
      tour.push_back({sl.x_lo, sl.lower});
      tour.push_back({columns_[j - 1].x, columns_[j - 1].lower});
    }

    detail::drop_repeats(tour, true);
    if (!fat && tour.size() > 1) {
      // Zero-area component: open the closed walk and drop the tail that
      // walks back over segments already traced.
      tour.push_back(tour.front());
      auto retraced = [&](std::size_t m) {
        for (std::size_t i = 0; i + 1 < m; ++i)
          if (detail::near(tour[i], tour[m]) && detail::near(tour[i + 1], tour[m - 1]))
            return true;
        return false;
      };
      while (tour.size() > 2 && retraced(tour.size() - 1))
        tour.pop_back();
    }
    detail::drop_straight(tour, fat);
    Polyline pl;
    pl.closed = fat;
    for (const auto& q : tour)
      pl.points.push_back(out_of_frame(q, frame_));
    out.push_back(std::move(pl));
    s = e + 1;
  }
  return out;
}

/// Euclidean distance from `p` to the nearest polyline segment or vertex.
[[nodiscard]] inline double boundary_distance(std::span<const Polyline> lines, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pl : lines) {
    const auto& v = pl.points;
    if (v.size() == 1)
      best = std::min(best, distance(p, v.front()));
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      best = std::min(best, segment_distance(p, v[i], v[i + 1]));
    if (pl.closed && v.size() > 2)
      best = std::min(best, segment_distance(p, v.back(), v.front()));
  }
  return best;
}

} // namespace rectihull
