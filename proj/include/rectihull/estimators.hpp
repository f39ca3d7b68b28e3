#pragma once

// Statistical layer: the hull-area curve over frame angles, the angle
// estimator, inner-point diagnostics and the convergence experiments.

#include "rectihull/alpha.hpp"
#include "rectihull/error.hpp"
#include "rectihull/geom.hpp"
#include "rectihull/hull.hpp"
#include "rectihull/metrics.hpp"
#include "rectihull/parallel.hpp"
#include "rectihull/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rectihull {

/// Area of the theta-biconvex hull of the sample.
[[nodiscard]] inline double psi(std::span<const Point2> points, double theta) {
  return build_hull(points, theta).area();
}

struct AngleScan {
  std::vector<double> thetas;
  std::vector<double> psi;
  double argmin_theta = 0.0;
  std::optional<double> refined_theta;
};

/// Evaluates psi on {j * (pi/2) / grid_k} and returns the grid argmin
/// (smallest angle on ties). With `refine`, a 40-step golden-section search
/// over the two grid cells around the argmin gives `refined_theta`; psi is
/// not unimodal in general, so the grid argmin stays the estimate.
[[nodiscard]] inline AngleScan estimate_angle(std::span<const Point2> points, std::size_t grid_k,
                                              bool refine = false) {
  if (grid_k < 8)
    throw std::invalid_argument("estimate_angle needs grid_k >= 8");
  if (points.empty())
    throw EmptySample("estimate_angle needs at least one point");
  AngleScan scan;
  const double step = kHalfPi / static_cast<double>(grid_k);
  std::size_t best = 0;
  for (std::size_t j = 0; j < grid_k; ++j) {
    scan.thetas.push_back(static_cast<double>(j) * step);
    scan.psi.push_back(psi(points, scan.thetas.back()));
    if (scan.psi.back() < scan.psi[best])
      best = j;
  }
  scan.argmin_theta = scan.thetas[best];

  if (refine) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = scan.argmin_theta - step, b = scan.argmin_theta + step;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = psi(points, c), fd = psi(points, d);
    for (int it = 0; it < 40; ++it) {
      if (fc <= fd) {
        b = d, d = c, fd = fc;
        c = b - kInvPhi * (b - a);
        fc = psi(points, c);
      } else {
        a = c, c = d, fc = fd;
        d = a + kInvPhi * (b - a);
        fd = psi(points, d);
      }
    }
    double t = fc <= fd ? c : d;
    if (std::min(fc, fd) > scan.psi[best])
      t = scan.argmin_theta;
    scan.refined_theta = reduce_angle(t);
  }
  return scan;
}

struct InnerSplit {
  std::vector<Point2> inner;
  std::vector<Point2> extremal;
};

/// Splits the sample into extremal points (Pareto-maximal in some quadrant
/// orientation) and inner points (every closed quadrant holds another point).
[[nodiscard]] inline InnerSplit inner_subsample(std::span<const Point2> points, double theta) {
  const auto h = build_hull(points, theta);
  InnerSplit out;
  const auto& mask = h.extremal_mask();
  for (std::size_t i = 0; i < points.size(); ++i)
    (mask[i] ? out.extremal : out.inner).push_back(points[i]);
  return out;
}

struct LemmaRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double r_n = 0.0;
  std::size_t deep = 0;
  std::size_t deep_extremal = 0;
  double fraction = 0.0;
};

/// For each (n, seed): sample the region, take r_n = n^-(1/2 + eps), and
/// count how many sample points at depth r_n are extremal.
[[nodiscard]] inline std::vector<LemmaRow>
lemma_rate_diagnostic(const Region& region, double theta, std::span<const std::size_t> ns, double eps,
                      std::span<const std::uint64_t> seeds, std::size_t probes = 64,
                      std::size_t threads = 1) {
  if (!(eps > 0 && eps < 0.5))
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  std::vector<LemmaRow> rows(ns.size() * seeds.size());
  parallel_for(rows.size(), threads, [&](std::size_t cell) {
    const std::size_t n = ns[cell / seeds.size()];
    const std::uint64_t seed = seeds[cell % seeds.size()];
    const auto batch = uniform_sample(region, n, seed);
    const auto hull = build_hull(batch.points, theta);
    LemmaRow row{n, seed, std::pow(static_cast<double>(n), -(0.5 + eps)), 0, 0, 0.0};
    for (std::size_t i = 0; i < batch.points.size(); ++i)
      if (deep_interior(region, batch.points[i], row.r_n, probes)) {
        ++row.deep;
        if (hull.extremal_mask()[i])
          ++row.deep_extremal;
      }
    row.fraction = row.deep ? static_cast<double>(row.deep_extremal) / static_cast<double>(row.deep) : 0.0;
    rows[cell] = row;
  });
  return rows;
}

struct ConvergenceRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double theta = 0.0;
  double dh_sample = 0.0; ///< d_H(S, sample)
  double dh_hull = 0.0;   ///< d_H(hull(sample), hull(S))
  double dmu = 0.0;       ///< area of hull(sample) symmetric-difference hull(S)
  double ratio = 0.0;     ///< dh_hull / dh_sample
};

struct ConvergenceConfig {
  double h = 0.005;
  std::size_t mc_n = 50000;
  /// When true the region is taken as its own theta-hull (theta is a
  /// biconvexity angle). Otherwise the reference is the hull of the region's
  /// lattice members at pitch `reference_mesh`.
  bool theta_is_biconvexity_angle = true;
  double reference_mesh = 0.005;
  std::size_t threads = 1;
};

namespace detail {

inline MembershipFn reference_set(const Region& region, double theta, const ConvergenceConfig& cfg) {
  if (cfg.theta_is_biconvexity_angle)
    return membership_of(region);
  std::vector<Point2> dense;
  for (const auto& p : lattice(region.bounds(), cfg.reference_mesh))
    if (region.contains(p))
      dense.push_back(p);
  return membership_of(build_hull(dense, theta));
}

} // namespace detail

/// One row per (n, seed), ordered by n then seed.
[[nodiscard]] inline std::vector<ConvergenceRow>
run_convergence(const Region& region, double theta, std::span<const std::size_t> ns,
                std::span<const std::uint64_t> seeds, const ConvergenceConfig& cfg = {}) {
  const MembershipFn reference = detail::reference_set(region, theta, cfg);
  const MembershipFn truth = membership_of(region);
  std::vector<ConvergenceRow> rows(ns.size() * seeds.size());
  parallel_for(rows.size(), cfg.threads, [&](std::size_t cell) {
    const std::size_t n = ns[cell / seeds.size()];
    const std::uint64_t seed = seeds[cell % seeds.size()];
    const auto batch = uniform_sample(region, n, seed);
    const auto hull = membership_of(build_hull(batch.points, theta));
    ConvergenceRow row{n, seed, reduce_angle(theta)};
    row.dh_sample = hausdorff_region_points(truth, batch.points, cfg.h).value;
    row.dh_hull = hausdorff_memberships(hull, reference, cfg.h).value;
    row.dmu = dmu_mc(hull, reference, region.bounds(), cfg.mc_n, seed).value;
    row.ratio = row.dh_sample > 0 ? row.dh_hull / row.dh_sample : 0.0;
    rows[cell] = row;
  });
  return rows;
}

struct AlphaRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double dmu = 0.0;
};

struct ExperimentConfig {
  std::string name = "s5";
  std::vector<std::size_t> ns{1000, 2000};
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
  double alpha = 1.0 / 3.0;
  double theta = std::numbers::pi / 4;
  std::size_t center_grid = 128;
  ConvergenceConfig convergence{};
};

struct ExperimentResult {
  std::vector<ConvergenceRow> rows;
  std::vector<AlphaRow> alpha_rows;
};

/// Named benchmark regions. Only "s5" exists.
[[nodiscard]] inline std::optional<Region> experiment_region(const std::string& name) {
  if (name == "s5")
    return s5_region();
  return std::nullopt;
}

/// Biconvex-hull convergence rows plus the alpha-hull distance in measure
/// on the same samples and Monte Carlo points.
[[nodiscard]] inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto region = experiment_region(cfg.name);
  if (!region)
    throw std::invalid_argument("unknown experiment '" + cfg.name + "'");
  std::vector<std::uint64_t> seeds;
  for (std::size_t s = 0; s < cfg.seeds; ++s)
    seeds.push_back(cfg.first_seed + s);

  ExperimentResult out;
  out.rows = run_convergence(*region, cfg.theta, cfg.ns, seeds, cfg.convergence);
  out.alpha_rows.resize(cfg.ns.size() * seeds.size());
  const MembershipFn truth = membership_of(*region);
  parallel_for(out.alpha_rows.size(), cfg.convergence.threads, [&](std::size_t cell) {
    const std::size_t n = cfg.ns[cell / seeds.size()];
    const std::uint64_t seed = seeds[cell % seeds.size()];
    const auto batch = uniform_sample(*region, n, seed);
    const AlphaHull alpha({batch.points, cfg.alpha, cfg.center_grid});
    out.alpha_rows[cell] = {n, seed, cfg.alpha,
                            dmu_mc(membership_of(alpha), truth, region->bounds(),
                                   cfg.convergence.mc_n, seed)
                                .value};
  });
  return out;
}

} // namespace rectihull
