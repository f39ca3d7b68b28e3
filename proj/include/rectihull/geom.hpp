#pragma once

// Elementary planar geometry: points, rotated frames, rectangles and simple
// polygons. Everything here is a value type; all functions are pure.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace rectihull {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Boundary tolerance used by closed-set membership tests.
inline constexpr double kBoundaryTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

[[nodiscard]] constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
[[nodiscard]] inline double distance(Point2 a, Point2 b) { return norm(a - b); }
[[nodiscard]] inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Euclidean distance from `p` to the closed segment [a, b].
[[nodiscard]] inline double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0)
    return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

/// Reduces an angle into [0, pi/2).
[[nodiscard]] inline double reduce_angle(double theta) {
  double r = std::fmod(theta, kHalfPi);
  if (r < 0.0)
    r += kHalfPi;
  if (r >= kHalfPi)
    r = 0.0;
  return r;
}

/// Orthonormal frame (b1, b2): b1 is e1 rotated counter-clockwise by theta,
/// b2 is b1 rotated by a further quarter turn.
///
/// The constructor accepts any angle; `Frame::canonical` reduces it into
/// [0, pi/2) first, which is the domain used for biconvexity angles.
class Frame {
public:
  Frame() : Frame(0.0) {}
  explicit Frame(double theta)
      : theta_(theta), b1_{std::cos(theta), std::sin(theta)}, b2_{-b1_.y, b1_.x} {}

  [[nodiscard]] static Frame canonical(double theta) { return Frame(reduce_angle(theta)); }

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] Point2 b1() const noexcept { return b1_; }
  [[nodiscard]] Point2 b2() const noexcept { return b2_; }

private:
  double theta_;
  Point2 b1_;
  Point2 b2_;
};

/// World coordinates to (b1, b2) coordinates.
[[nodiscard]] inline Point2 into_frame(Point2 p, const Frame& f) {
  return {dot(p, f.b1()), dot(p, f.b2())};
}

/// Inverse of `into_frame`.
[[nodiscard]] inline Point2 out_of_frame(Point2 q, const Frame& f) {
  return q.x * f.b1() + q.y * f.b2();
}

[[nodiscard]] inline std::vector<Point2> into_frame(std::span<const Point2> pts, const Frame& f) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    out.push_back(into_frame(p, f));
  return out;
}

/// Closed axis-aligned rectangle.
struct Rect {
  Point2 min;
  Point2 max;

  [[nodiscard]] double width() const { return max.x - min.x; }
  [[nodiscard]] double height() const { return max.y - min.y; }
  [[nodiscard]] double area() const { return width() * height(); }
  [[nodiscard]] bool contains(Point2 p, double tol = kBoundaryTol) const {
    return p.x >= min.x - tol && p.x <= max.x + tol && p.y >= min.y - tol && p.y <= max.y + tol;
  }
  [[nodiscard]] Rect inflated(double d) const {
    return {{min.x - d, min.y - d}, {max.x + d, max.y + d}};
  }
  [[nodiscard]] Rect united(const Rect& o) const {
    return {{std::min(min.x, o.min.x), std::min(min.y, o.min.y)},
            {std::max(max.x, o.max.x), std::max(max.y, o.max.y)}};
  }
};

/// Bounding box of a nonempty point set.
[[nodiscard]] inline Rect bounding_box(std::span<const Point2> pts) {
  if (pts.empty())
    throw std::invalid_argument("bounding_box of empty point set");
  Rect r{pts.front(), pts.front()};
  for (const auto& p : pts) {
    r.min = {std::min(r.min.x, p.x), std::min(r.min.y, p.y)};
    r.max = {std::max(r.max.x, p.x), std::max(r.max.y, p.y)};
  }
  return r;
}

namespace detail {

inline int orient_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

inline bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

inline bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
  if (o1 != o2 && o3 != o4)
    return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

} // namespace detail

/// Simple polygon, either winding. Validated on construction.
class Polygon {
public:
  explicit Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) { validate(); }

  [[nodiscard]] std::span<const Point2> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] Point2 edge_start(std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] Point2 edge_end(std::size_t i) const { return vertices_[(i + 1) % size()]; }

  /// Signed shoelace area, positive for counter-clockwise winding.
  [[nodiscard]] double signed_area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      s += cross(edge_start(i), edge_end(i));
    return 0.5 * s;
  }

  [[nodiscard]] double boundary_distance(Point2 p) const {
    double best = INFINITY;
    for (std::size_t i = 0; i < size(); ++i)
      best = std::min(best, segment_distance(p, edge_start(i), edge_end(i)));
    return best;
  }

  [[nodiscard]] Rect bounds() const { return bounding_box(vertices_); }

private:
  void validate() const {
    const std::size_t n = vertices_.size();
    if (n < 3)
      throw std::invalid_argument("polygon needs at least 3 vertices");
    for (const auto& v : vertices_)
      if (!is_finite(v))
        throw std::invalid_argument("polygon vertex is not finite");
    for (std::size_t i = 0; i < n; ++i)
      if (vertices_[i] == vertices_[(i + 1) % n])
        throw std::invalid_argument("polygon has repeated consecutive vertices");
    // Adjacent edges share one vertex; they are invalid only when they fold back.
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 a = edge_start(i), b = edge_end(i), c = edge_end((i + 1) % n);
      if (detail::orient_sign(a, b, c) == 0 && dot(b - a, c - b) < 0)
        throw std::invalid_argument("polygon edges overlap");
    }
    if (n == 3)
      return;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1)
          continue;
        if (detail::segments_intersect(edge_start(i), edge_end(i), edge_start(j), edge_end(j)))
          throw std::invalid_argument("polygon edges self-intersect");
      }
  }

  std::vector<Point2> vertices_;
};

[[nodiscard]] inline double polygon_area(const Polygon& poly) { return std::abs(poly.signed_area()); }

/// Closed membership: boundary points (within `tol`) count as inside.
[[nodiscard]] inline bool point_in_polygon(Point2 p, const Polygon& poly, double tol = kBoundaryTol) {
  if (poly.boundary_distance(p) <= tol)
    return true;
  bool inside = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.edge_start(i), b = poly.edge_end(i);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xs = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xs)
        inside = !inside;
    }
  }
  return inside;
}

} // namespace rectihull
