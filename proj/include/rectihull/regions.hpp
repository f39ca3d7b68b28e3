#pragma once

// Ground-truth support sets built from primitives with union and
// difference. Subtracted pieces remove only their open interior, and
// boundary pieces that bound no interior are dropped, so a difference is
// the closure of its interior.

#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/random.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace rectihull {

class Region {
public:
  enum class Kind { Rect, Polygon, Triangle, Disk, Union, Difference };

  static constexpr int kMaxDepth = 16;

  [[nodiscard]] static Region rect(Point2 min, Point2 max) {
    if (!(is_finite(min) && is_finite(max)) || !(min.x < max.x && min.y < max.y))
      throw std::invalid_argument("rect needs finite min < max");
    auto n = std::make_shared<Node>(Kind::Rect);
    n->box = {min, max};
    return Region(std::move(n));
  }

  [[nodiscard]] static Region polygon(std::vector<Point2> vertices) {
    auto n = std::make_shared<Node>(Kind::Polygon);
    n->poly.emplace(std::move(vertices));
    n->box = n->poly->bounds();
    return Region(std::move(n));
  }

  [[nodiscard]] static Region triangle(Point2 a, Point2 b, Point2 c) {
    auto n = std::make_shared<Node>(Kind::Triangle);
    n->poly.emplace(std::vector<Point2>{a, b, c});
    n->box = n->poly->bounds();
    return Region(std::move(n));
  }

  [[nodiscard]] static Region disk(Point2 center, double radius) {
    if (!is_finite(center) || !(radius > 0) || !std::isfinite(radius))
      throw std::invalid_argument("disk needs a finite center and positive radius");
    auto n = std::make_shared<Node>(Kind::Disk);
    n->center = center;
    n->radius = radius;
    n->box = {{center.x - radius, center.y - radius}, {center.x + radius, center.y + radius}};
    return Region(std::move(n));
  }

  [[nodiscard]] static Region union_of(std::vector<Region> items) {
    if (items.empty())
      throw std::invalid_argument("union needs at least one item");
    auto n = std::make_shared<Node>(Kind::Union);
    n->box = items.front().bounds();
    for (const auto& r : items)
      n->box = n->box.united(r.bounds());
    n->children = std::move(items);
    return Region(std::move(n));
  }

  /// `a` minus the open interiors of every region in `holes`.
  [[nodiscard]] static Region difference(Region a, std::vector<Region> holes) {
    auto n = std::make_shared<Node>(Kind::Difference);
    n->box = a.bounds();
    n->children.push_back(std::move(a));
    for (auto& h : holes)
      n->children.push_back(std::move(h));
    return Region(std::move(n));
  }

  [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
  [[nodiscard]] const Rect& bounds() const noexcept { return node_->box; }
  [[nodiscard]] const std::vector<Region>& children() const noexcept { return node_->children; }
  [[nodiscard]] const std::optional<Polygon>& polygon_shape() const noexcept { return node_->poly; }
  [[nodiscard]] Point2 center() const noexcept { return node_->center; }
  [[nodiscard]] double radius() const noexcept { return node_->radius; }

  [[nodiscard]] int depth() const {
    int d = 0;
    for (const auto& c : node_->children)
      d = std::max(d, c.depth());
    return d + 1;
  }

  /// Closed membership with boundary tolerance.
  [[nodiscard]] bool contains(Point2 p, double tol = kBoundaryTol) const {
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::Rect:
      return n.box.contains(p, tol);
    case Kind::Polygon:
    case Kind::Triangle:
      return point_in_polygon(p, *n.poly, tol);
    case Kind::Disk:
      return distance(p, n.center) <= n.radius + tol;
    case Kind::Union:
      for (const auto& c : n.children)
        if (c.contains(p, tol))
          return true;
      return false;
    case Kind::Difference: {
      if (!n.children.front().contains(p, tol))
        return false;
      for (std::size_t i = 1; i < n.children.size(); ++i)
        if (n.children[i].interior_contains(p, tol))
          return false;
      if (interior_contains(p, tol))
        return true;
      // p is on a boundary. Keep it only if it touches the interior of the
      // difference, so edges shared by the outer set and a hole (which bound
      // nothing) are dropped and the set stays the closure of its interior.
      constexpr int kProbes = 16;
      const double rho = 16.0 * std::max(tol, 1e-12);
      for (int k = 0; k < kProbes; ++k) {
        const double a = 2.0 * std::numbers::pi * (k + 0.5) / kProbes;
        if (interior_contains({p.x + rho * std::cos(a), p.y + rho * std::sin(a)}, 0.0))
          return true;
      }
      return false;
    }
    }
    return false;
  }

  /// Open membership: inside and farther than `tol` from the boundary. For
  /// unions this is the union of the children's interiors, which misses
  /// seams where two children abut.
  [[nodiscard]] bool interior_contains(Point2 p, double tol = kBoundaryTol) const {
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::Rect:
      return p.x > n.box.min.x + tol && p.x < n.box.max.x - tol && p.y > n.box.min.y + tol &&
             p.y < n.box.max.y - tol;
    case Kind::Polygon:
    case Kind::Triangle:
      return point_in_polygon(p, *n.poly, 0.0) && n.poly->boundary_distance(p) > tol;
    case Kind::Disk:
      return distance(p, n.center) < n.radius - tol;
    case Kind::Union:
      for (const auto& c : n.children)
        if (c.interior_contains(p, tol))
          return true;
      return false;
    case Kind::Difference:
      if (!n.children.front().interior_contains(p, tol))
        return false;
      for (std::size_t i = 1; i < n.children.size(); ++i)
        if (n.children[i].contains(p, tol))
          return false;
      return true;
    }
    return false;
  }

private:
  struct Node {
    explicit Node(Kind k) : kind(k) {}
    Kind kind;
    Rect box{};
    std::optional<Polygon> poly;
    Point2 center{};
    double radius = 0.0;
    std::vector<Region> children;
  };

  explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {
    if (depth() > kMaxDepth)
      throw std::invalid_argument("region tree deeper than 16 levels");
  }

  std::shared_ptr<const Node> node_;
};

[[nodiscard]] inline bool region_contains(const Region& r, Point2 p) { return r.contains(p); }

/// [0,1]^2 minus the open triangles T1 = (0,1),(1/2,1/2),(1,1) and
/// T2 = (0,0),(1/2,1/2),(1,0). Biconvex for the frame at angle pi/4.
[[nodiscard]] inline Region s5_region() {
  return Region::difference(Region::rect({0, 0}, {1, 1}),
                            {Region::triangle({0, 1}, {0.5, 0.5}, {1, 1}),
                             Region::triangle({0, 0}, {0.5, 0.5}, {1, 0})});
}

struct AreaEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = false;
};

enum class AreaMethod { Auto, MonteCarlo };

namespace detail {

inline bool is_polygonal(const Region& r) {
  return r.kind() == Region::Kind::Polygon || r.kind() == Region::Kind::Triangle ||
         r.kind() == Region::Kind::Rect;
}

inline Polygon as_polygon(const Region& r) {
  if (r.kind() == Region::Kind::Rect) {
    const Rect& b = r.bounds();
    return Polygon({b.min, {b.max.x, b.min.y}, b.max, {b.min.x, b.max.y}});
  }
  return *r.polygon_shape();
}

inline bool interiors_disjoint(const Polygon& a, const Polygon& b) {
  const Rect ra = a.bounds(), rb = b.bounds();
  if (ra.max.x <= rb.min.x || rb.max.x <= ra.min.x || ra.max.y <= rb.min.y || rb.max.y <= ra.min.y)
    return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Point2 p = a.edge_start(i), q = a.edge_end(i), r = b.edge_start(j), s = b.edge_end(j);
      const int o1 = orient_sign(p, q, r), o2 = orient_sign(p, q, s);
      const int o3 = orient_sign(r, s, p), o4 = orient_sign(r, s, q);
      if (o1 * o2 < 0 && o3 * o4 < 0)
        return false;
    }
  auto strictly_inside = [](Point2 p, const Polygon& poly) {
    return point_in_polygon(p, poly, 0.0) && poly.boundary_distance(p) > kBoundaryTol;
  };
  for (const auto& v : a.vertices())
    if (strictly_inside(v, b))
      return false;
  for (const auto& v : b.vertices())
    if (strictly_inside(v, a))
      return false;
  auto centroid = [](const Polygon& poly) {
    Point2 c{};
    for (const auto& v : poly.vertices())
      c = c + v;
    return (1.0 / static_cast<double>(poly.size())) * c;
  };
  return !strictly_inside(centroid(a), b) && !strictly_inside(centroid(b), a);
}

inline std::optional<double> exact_area(const Region& r) {
  if (is_polygonal(r))
    return r.kind() == Region::Kind::Rect ? r.bounds().area() : polygon_area(*r.polygon_shape());
  if (r.kind() != Region::Kind::Difference || r.children().front().kind() != Region::Kind::Rect)
    return std::nullopt;
  const Rect outer = r.children().front().bounds();
  std::vector<Polygon> holes;
  for (std::size_t i = 1; i < r.children().size(); ++i) {
    const Region& h = r.children()[i];
    if (!is_polygonal(h))
      return std::nullopt;
    holes.push_back(as_polygon(h));
    for (const auto& v : holes.back().vertices())
      if (!outer.contains(v, 0.0))
        return std::nullopt;
  }
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (!interiors_disjoint(holes[i], holes[j]))
        return std::nullopt;
  double a = outer.area();
  for (const auto& h : holes)
    a -= polygon_area(h);
  return a;
}

} // namespace detail

/// Area of a region. Polygonal primitives and a rectangle minus interior-
/// disjoint polygons inside it are computed exactly; anything else by Monte
/// Carlo over the bounding box with `mc_n` draws.
[[nodiscard]] inline AreaEstimate region_area(const Region& r, std::size_t mc_n, std::uint64_t seed,
                                              AreaMethod method = AreaMethod::Auto) {
  if (mc_n < 1000)
    throw std::invalid_argument("region_area needs mc_n >= 1000");
  if (method == AreaMethod::Auto)
    if (auto a = detail::exact_area(r))
      return {*a, 0.0, true};
  CounterRng rng(seed, stream::kArea);
  const Rect box = r.bounds();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < mc_n; ++i) {
    const double x = rng.uniform(box.min.x, box.max.x);
    const double y = rng.uniform(box.min.y, box.max.y);
    if (r.contains({x, y}))
      ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(mc_n);
  return {box.area() * p, box.area() * std::sqrt(p * (1 - p) / static_cast<double>(mc_n)), false};
}

struct SampleBatch {
  std::vector<Point2> points;
  std::uint64_t seed = 0;
  std::string region_id;
};

/// Uniform sample by rejection from the bounding box. Deterministic per
/// seed. Throws RejectionStall when acceptance stays below 1e-4 over 1e6
/// draws.
[[nodiscard]] inline SampleBatch uniform_sample(const Region& r, std::size_t n, std::uint64_t seed,
                                                std::string region_id = {}) {
  constexpr std::uint64_t kWindow = 1'000'000;
  constexpr double kMinRate = 1e-4;
  SampleBatch out{{}, seed, std::move(region_id)};
  out.points.reserve(n);
  CounterRng rng(seed, stream::kSample);
  const Rect box = r.bounds();
  std::uint64_t window_draws = 0, window_hits = 0;
  while (out.points.size() < n) {
    const double x = rng.uniform(box.min.x, box.max.x);
    const double y = rng.uniform(box.min.y, box.max.y);
    ++window_draws;
    if (r.contains({x, y})) {
      out.points.push_back({x, y});
      ++window_hits;
    }
    if (window_draws == kWindow) {
      if (static_cast<double>(window_hits) < kMinRate * static_cast<double>(kWindow))
        throw RejectionStall("rejection sampling accepted " + std::to_string(window_hits) +
                             " of " + std::to_string(kWindow) + " draws");
      window_draws = window_hits = 0;
    }
  }
  return out;
}

/// Approximate erosion test B(p, rho) in r: the center and k equally spaced
/// points on the circle of radius rho must all be members. Can report true
/// for a ball that pokes out between probes (gap at most rho*pi/k).
[[nodiscard]] inline bool deep_interior(const Region& r, Point2 p, double rho, std::size_t k = 64) {
  if (!(rho > 0))
    throw std::invalid_argument("deep_interior needs rho > 0");
  if (k < 16)
    throw std::invalid_argument("deep_interior needs k >= 16");
  if (!r.contains(p))
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
    if (!r.contains({p.x + rho * std::cos(a), p.y + rho * std::sin(a)}))
      return false;
  }
  return true;
}

} // namespace rectihull
