#include "rectihull/estimators.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace rectihull;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(testutil::rect_corners(), 0.0), 1.0);
  const std::vector<Point2> two{{0, 0}, {1, 1}};
  EXPECT_EQ(psi(two, 0.0), 0.0);
  EXPECT_THROW((void)psi({}, 0.0), EmptySample);
}

TEST(Psi, S5SampleNearPaperValue) {
  // area(S) - d_mu; the paper reports d_mu = 0.04335 for one n=1000 sample
  const auto b = uniform_sample(s5_region(), 1000, 0);
  EXPECT_NEAR(psi(b.points, kPi / 4), 0.5 - 0.04335, 0.03);
}

TEST(Psi, QuarterTurnPeriod) {
  const auto pts = testutil::random_points(100, 12);
  for (double t : {0.0, 0.2, 0.7, 1.3})
    EXPECT_NEAR(psi(pts, t), psi(pts, t + kPi / 2), 1e-9);
}

TEST(EstimateAngle, RectCorners) {
  // Four corners of a unit square seen in a frame turned by t: the hull is
  // the square minus four corner triangles, area 1 - sin(2t). At pi/4 the
  // corners form a diamond and the hull is a zero-area cross.
  const auto scan = estimate_angle(testutil::rect_corners(), 8);
  ASSERT_EQ(scan.thetas.size(), 8u);
  for (std::size_t j = 0; j < 8; ++j)
    EXPECT_NEAR(scan.psi[j], 1 - std::sin(2 * scan.thetas[j]), 1e-12);
  EXPECT_EQ(scan.psi[0], 1.0);
  EXPECT_DOUBLE_EQ(scan.argmin_theta, kPi / 4);
  EXPECT_FALSE(scan.refined_theta);
}

TEST(EstimateAngle, GridAndTieBreak) {
  const std::vector<Point2> one{{1, 2}};
  const auto scan = estimate_angle(one, 12, true);
  EXPECT_EQ(scan.argmin_theta, 0.0); // all zero; smallest wins
  for (std::size_t j = 0; j < scan.thetas.size(); ++j)
    EXPECT_DOUBLE_EQ(scan.thetas[j], j * kPi / 2 / 12);
  ASSERT_TRUE(scan.refined_theta);
  EXPECT_GE(*scan.refined_theta, 0.0);
  EXPECT_LT(*scan.refined_theta, kPi / 2);
  EXPECT_THROW((void)estimate_angle(one, 7), std::invalid_argument);
  EXPECT_THROW((void)estimate_angle({}, 8), EmptySample);
}

TEST(EstimateAngle, S5FindsQuarterPi) {
  const auto b = uniform_sample(s5_region(), 2000, 1);
  const auto scan = estimate_angle(b.points, 90, true);
  EXPECT_NEAR(scan.argmin_theta, kPi / 4, 0.05);
  ASSERT_TRUE(scan.refined_theta);
  EXPECT_NEAR(*scan.refined_theta, kPi / 4, 0.05);
  EXPECT_GE(scan.psi[0] - scan.psi[45], 0.3);
}

TEST(EstimateAngle, DiskIsFlat) {
  const auto b = uniform_sample(Region::disk({0, 0}, 1), 2000, 2);
  const auto scan = estimate_angle(b.points, 30);
  const auto [lo, hi] = std::minmax_element(scan.psi.begin(), scan.psi.end());
  EXPECT_LE(*hi - *lo, 0.05 * kPi);
}

TEST(InnerSubsample, Examples) {
  std::vector<Point2> grid;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      grid.push_back({double(i), double(j)});
  const auto g = inner_subsample(grid, 0.0);
  EXPECT_EQ(g.inner, (std::vector<Point2>{{1, 1}}));
  EXPECT_EQ(g.extremal.size(), 8u);
  EXPECT_TRUE(inner_subsample(testutil::rect_corners(), 0.0).inner.empty());
  const std::vector<Point2> one{{0, 0}};
  EXPECT_EQ(inner_subsample(one, 0.0).extremal.size(), 1u);
}

TEST(LemmaDiagnostic, RowsAndRadius) {
  const std::vector<std::size_t> ns{10, 200};
  const std::vector<std::uint64_t> seeds{0, 1, 2};
  const auto rows = lemma_rate_diagnostic(Region::rect({0, 0}, {1, 1}), 0.0, ns, 0.1, seeds);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].n, 10u);
  EXPECT_EQ(rows[5].seed, 2u);
  EXPECT_NEAR(rows[3].r_n, std::pow(200.0, -0.6), 1e-15);
  for (const auto& r : rows) {
    EXPECT_LE(r.deep_extremal, r.deep);
    EXPECT_GE(r.fraction, 0.0);
    EXPECT_LE(r.fraction, 1.0);
  }
  EXPECT_THROW((void)lemma_rate_diagnostic(Region::rect({0, 0}, {1, 1}), 0.0, ns, 0.5, seeds),
               std::invalid_argument);
}

TEST(Convergence, RowsRespectRateBound) {
  const std::vector<std::size_t> ns{300};
  const std::vector<std::uint64_t> seeds{0, 1};
  ConvergenceConfig cfg;
  cfg.mc_n = 5000;
  cfg.h = 0.01;
  const auto rows = run_convergence(s5_region(), kPi / 4, ns, seeds, cfg);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_GT(r.dh_sample, 0.0);
    EXPECT_LE(r.dh_hull, 2 * std::numbers::sqrt2 * r.dh_sample + 2 * cfg.h * std::numbers::sqrt2);
    EXPECT_NEAR(r.ratio, r.dh_hull / r.dh_sample, 1e-15);
    EXPECT_GE(r.dmu, 0.0);
    EXPECT_NEAR(r.theta, kPi / 4, 1e-15);
  }
}

TEST(Convergence, ThreadCountDoesNotChangeRows) {
  const std::vector<std::size_t> ns{200, 300};
  const std::vector<std::uint64_t> seeds{4, 5};
  ConvergenceConfig one, many;
  one.mc_n = many.mc_n = 2000;
  one.h = many.h = 0.02;
  many.threads = 4;
  const auto a = run_convergence(s5_region(), kPi / 4, ns, seeds, one);
  const auto b = run_convergence(s5_region(), kPi / 4, ns, seeds, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].n, b[i].n);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].dh_hull, b[i].dh_hull);
    EXPECT_EQ(a[i].dmu, b[i].dmu);
  }
}

TEST(Convergence, WrongAngleUsesHullReference) {
  ConvergenceConfig cfg;
  cfg.mc_n = 5000;
  cfg.h = 0.02;
  cfg.theta_is_biconvexity_angle = false;
  cfg.reference_mesh = 0.01;
  const std::vector<std::size_t> ns{500};
  const std::vector<std::uint64_t> seeds{0};
  const auto rows = run_convergence(s5_region(), 0.0, ns, seeds, cfg);
  // the sample hull converges to the axis hull of S (the full square), not to
  // S itself, which is 0.5 away in measure
  EXPECT_LT(rows[0].dmu, 0.2);
  const auto truth = membership_of(s5_region());
  const auto hull = membership_of(build_hull(uniform_sample(s5_region(), 500, 0).points, 0.0));
  EXPECT_GT(dmu_mc(hull, truth, Rect{{0, 0}, {1, 1}}, 5000, 0).value, 0.3);
}

TEST(Experiment, UnknownNameThrows) {
  ExperimentConfig cfg;
  cfg.name = "s6";
  EXPECT_THROW((void)run_experiment(cfg), std::invalid_argument);
  EXPECT_TRUE(experiment_region("s5").has_value());
}
