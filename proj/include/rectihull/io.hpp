#pragma once

// File formats: point CSV, region JSON, hull JSON, angle-scan JSON and the
// experiment CSVs. Reals are written with 17 significant digits.

#include "rectihull/error.hpp"
#include "rectihull/estimators.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/hull.hpp"
#include "rectihull/regions.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rectihull::io {

[[nodiscard]] inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline bool parse_real(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

inline bool is_header(std::string_view line) {
  std::string t(trim(line));
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  return t == "x,y";
}

} // namespace detail

/// One "x,y" pair per line; an optional "x,y" header line; blank lines are
/// skipped. Throws ParseError carrying the 1-based line number.
[[nodiscard]] inline std::vector<Point2> read_points_csv(std::istream& in) {
  std::vector<Point2> pts;
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = detail::trim(line);
    if (body.empty())
      continue;
    if (!seen_content && detail::is_header(body)) {
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto comma = body.find(',');
    Point2 p;
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos ||
        !detail::parse_real(body.substr(0, comma), p.x) ||
        !detail::parse_real(body.substr(comma + 1), p.y))
      throw ParseError("expected \"x,y\" with two finite reals, got \"" + std::string(body) + "\"",
                       lineno);
    pts.push_back(p);
  }
  return pts;
}

[[nodiscard]] inline std::vector<Point2> read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  return read_points_csv(in);
}

inline void write_points_csv(std::ostream& out, std::span<const Point2> pts) {
  out << "x,y\n";
  for (const auto& p : pts)
    out << format_real(p.x) << ',' << format_real(p.y) << '\n';
}

// ---------------------------------------------------------------- regions

namespace detail {

inline Point2 json_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a point [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<Point2> json_points(const nlohmann::json& j) {
  if (!j.is_array())
    throw ParseError("expected an array of points");
  std::vector<Point2> out;
  for (const auto& p : j)
    out.push_back(json_point(p));
  return out;
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Region region_node(const nlohmann::json& j, int depth) {
  if (depth > Region::kMaxDepth)
    throw ParseError("region nested deeper than 16 levels");
  const auto& type_field = field(j, "type");
  if (!type_field.is_string())
    throw ParseError("region \"type\" must be a string");
  const std::string type = type_field.get<std::string>();
  if (type == "rect")
    return Region::rect(json_point(field(j, "min")), json_point(field(j, "max")));
  if (type == "polygon")
    return Region::polygon(json_points(field(j, "vertices")));
  if (type == "triangle") {
    const auto v = json_points(field(j, "vertices"));
    if (v.size() != 3)
      throw ParseError("triangle needs exactly 3 vertices");
    return Region::triangle(v[0], v[1], v[2]);
  }
  if (type == "disk") {
    const auto& r = field(j, "radius");
    if (!r.is_number())
      throw ParseError("disk radius must be a number");
    return Region::disk(json_point(field(j, "center")), r.get<double>());
  }
  if (type == "union") {
    const auto& items = field(j, "items");
    if (!items.is_array())
      throw ParseError("union \"items\" must be an array");
    std::vector<Region> rs;
    for (const auto& it : items)
      rs.push_back(region_node(it, depth + 1));
    return Region::union_of(std::move(rs));
  }
  if (type == "difference") {
    Region a = region_node(field(j, "a"), depth + 1);
    const auto& b = field(j, "b");
    std::vector<Region> holes;
    if (b.is_array())
      for (const auto& it : b)
        holes.push_back(region_node(it, depth + 1));
    else
      holes.push_back(region_node(b, depth + 1));
    return Region::difference(std::move(a), std::move(holes));
  }
  throw ParseError("unknown region type \"" + type + "\"");
}

} // namespace detail

[[nodiscard]] inline Region region_from_json(const nlohmann::json& j) {
  try {
    return detail::region_node(j, 1);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid region: ") + e.what());
  }
}

[[nodiscard]] inline Region read_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return region_from_json(j);
}

[[nodiscard]] inline nlohmann::json region_to_json(const Region& r) {
  auto pts = [](std::span<const Point2> v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : v)
      a.push_back({p.x, p.y});
    return a;
  };
  switch (r.kind()) {
  case Region::Kind::Rect:
    return {{"type", "rect"},
            {"min", {r.bounds().min.x, r.bounds().min.y}},
            {"max", {r.bounds().max.x, r.bounds().max.y}}};
  case Region::Kind::Polygon:
    return {{"type", "polygon"}, {"vertices", pts(r.polygon_shape()->vertices())}};
  case Region::Kind::Triangle:
    return {{"type", "triangle"}, {"vertices", pts(r.polygon_shape()->vertices())}};
  case Region::Kind::Disk:
    return {{"type", "disk"}, {"center", {r.center().x, r.center().y}}, {"radius", r.radius()}};
  case Region::Kind::Union: {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : r.children())
      items.push_back(region_to_json(c));
    return {{"type", "union"}, {"items", items}};
  }
  case Region::Kind::Difference: {
    nlohmann::json b = nlohmann::json::array();
    for (std::size_t i = 1; i < r.children().size(); ++i)
      b.push_back(region_to_json(r.children()[i]));
    return {{"type", "difference"}, {"a", region_to_json(r.children().front())}, {"b", b}};
  }
  }
  return {};
}

// ------------------------------------------------------------------- hulls

namespace detail {

inline void write_point(std::ostream& out, Point2 p) {
  out << '[' << format_real(p.x) << ',' << format_real(p.y) << ']';
}

} // namespace detail

/// Hull JSON: theta, area, slabs (frame coordinates), boundary polylines
/// (world coordinates; closed ones repeat their first vertex), extremal
/// point indices and the input points, so the hull can be rebuilt.
inline void write_hull_json(std::ostream& out, const BiconvexHull& h) {
  out << "{\"theta\":" << format_real(h.theta()) << ",\"area\":" << format_real(h.area());
  out << ",\"slabs\":[";
  bool first = true;
  for (const auto& s : h.slabs()) {
    out << (first ? "" : ",") << "{\"x_lo\":" << format_real(s.x_lo)
        << ",\"x_hi\":" << format_real(s.x_hi) << ",\"lower\":" << format_real(s.lower)
        << ",\"upper\":" << format_real(s.upper) << '}';
    first = false;
  }
  out << "],\"boundary\":[";
  first = true;
  for (const auto& pl : h.boundary()) {
    out << (first ? "[" : ",[");
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      if (i)
        out << ',';
      detail::write_point(out, pl.points[i]);
    }
    if (pl.closed) {
      out << ',';
      detail::write_point(out, pl.points.front());
    }
    out << ']';
    first = false;
  }
  out << "],\"extremal\":[";
  first = true;
  for (std::size_t i : h.extremal_indices()) {
    out << (first ? "" : ",") << i;
    first = false;
  }
  out << "],\"points\":[";
  for (std::size_t i = 0; i < h.points().size(); ++i) {
    if (i)
      out << ',';
    detail::write_point(out, h.points()[i]);
  }
  out << "]}\n";
}

/// Rebuilds a hull from the "theta" and "points" fields of hull JSON.
[[nodiscard]] inline BiconvexHull read_hull_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const auto& theta = detail::field(j, "theta");
  if (!theta.is_number())
    throw ParseError("hull \"theta\" must be a number");
  const auto pts = detail::json_points(detail::field(j, "points"));
  return build_hull(pts, theta.get<double>());
}

inline void write_angle_scan_json(std::ostream& out, const AngleScan& scan) {
  auto list = [&](const std::vector<double>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? "," : "") << format_real(v[i]);
    out << ']';
  };
  out << "{\"thetas\":";
  list(scan.thetas);
  out << ",\"psi\":";
  list(scan.psi);
  out << ",\"argmin\":" << format_real(scan.argmin_theta) << ",\"refined\":"
      << (scan.refined_theta ? format_real(*scan.refined_theta) : std::string("null")) << "}\n";
}

// ------------------------------------------------------------- experiments

inline void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "n,seed,theta,dh_sample,dh_hull,dmu,ratio\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.seed << ',' << format_real(r.theta) << ',' << format_real(r.dh_sample)
        << ',' << format_real(r.dh_hull) << ',' << format_real(r.dmu) << ','
        << format_real(r.ratio) << '\n';
}

inline void write_alpha_csv(std::ostream& out, std::span<const AlphaRow> rows) {
  out << "n,seed,alpha,dmu\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.seed << ',' << format_real(r.alpha) << ',' << format_real(r.dmu) << '\n';
}

} // namespace rectihull::io
