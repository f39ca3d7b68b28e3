#include "rectihull/regions.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace rectihull;

namespace {
Region unit_square() { return Region::rect({0, 0}, {1, 1}); }
} // namespace

TEST(Region, S5Membership) {
  const Region s = s5_region();
  EXPECT_FALSE(region_contains(s, {0.5, 0.9}));
  EXPECT_TRUE(region_contains(s, {0.1, 0.5}));
  EXPECT_TRUE(region_contains(s, {0.5, 0.5}));
  EXPECT_FALSE(region_contains(s, {0.5, 0.25}));
  EXPECT_TRUE(region_contains(s, {0.25, 0.25}));  // on the edge of T2, kept
  EXPECT_TRUE(region_contains(s, {0, 0.5}));
  EXPECT_FALSE(region_contains(s, {0.5, 1.0}));   // top edge of the square is inside T1's closure only
  EXPECT_FALSE(region_contains(s, {1.2, 0.5}));
}

TEST(Region, UnionAndDisk) {
  const Region u = Region::union_of({Region::rect({0, 0}, {1, 1}), Region::disk({3, 0}, 1)});
  EXPECT_TRUE(u.contains({0.5, 0.5}));
  EXPECT_TRUE(u.contains({3.5, 0.5}));
  EXPECT_FALSE(u.contains({2, 0.9}));
  EXPECT_TRUE(u.contains({4, 0}));
  EXPECT_EQ(u.bounds().max.x, 4.0);
}

TEST(Region, RejectsBadInput) {
  EXPECT_THROW((void)Region::rect({1, 0}, {0, 1}), std::invalid_argument);
  EXPECT_THROW((void)Region::disk({0, 0}, -1), std::invalid_argument);
  EXPECT_THROW((void)Region::union_of({}), std::invalid_argument);
}

TEST(Region, DepthLimit) {
  Region r = unit_square();
  for (int d = 1; d < Region::kMaxDepth; ++d)
    r = Region::union_of({r});
  EXPECT_EQ(r.depth(), Region::kMaxDepth);
  EXPECT_THROW((void)Region::union_of({r}), std::invalid_argument);
}

TEST(RegionArea, ExactPaths) {
  const auto sq = region_area(unit_square(), 1000, 0);
  EXPECT_TRUE(sq.exact);
  EXPECT_EQ(sq.value, 1.0);
  const auto s5 = region_area(s5_region(), 1000, 0);
  EXPECT_TRUE(s5.exact);
  EXPECT_DOUBLE_EQ(s5.value, 0.5);
}

TEST(RegionArea, DiskMonteCarlo) {
  const auto a = region_area(Region::disk({0, 0}, 1), 100000, 5);
  EXPECT_FALSE(a.exact);
  EXPECT_NEAR(a.value, std::numbers::pi, 3 * a.std_error);
  EXPECT_THROW((void)region_area(unit_square(), 999, 0), std::invalid_argument);
}

TEST(RegionArea, MonteCarloMatchesExact) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    CounterRng rng(s, 55);
    std::vector<Region> holes;
    // disjoint triangles in separate quarters of the square
    for (int q = 0; q < 2; ++q) {
      const double x0 = 0.5 * q + 0.05;
      holes.push_back(Region::triangle({x0, 0.1}, {x0 + 0.1 + 0.3 * rng.uniform(), 0.1 + 0.1 * rng.uniform()},
                                       {x0 + 0.2 * rng.uniform(), 0.4 + 0.5 * rng.uniform()}));
    }
    const Region r = Region::difference(unit_square(), holes);
    const auto exact = region_area(r, 1000, s);
    ASSERT_TRUE(exact.exact);
    const auto mc = region_area(r, 100000, s, AreaMethod::MonteCarlo);
    EXPECT_NEAR(mc.value, exact.value, 4 * mc.std_error);
  }
}

TEST(Sampling, UnitSquareMoments) {
  const std::size_t n = 10000;
  const auto b = uniform_sample(unit_square(), n, 11);
  ASSERT_EQ(b.points.size(), n);
  double mx = 0, my = 0;
  for (const auto& p : b.points)
    mx += p.x / n, my += p.y / n;
  const double sigma = 1.0 / std::sqrt(12.0 * n);
  EXPECT_NEAR(mx, 0.5, 3 * sigma);
  EXPECT_NEAR(my, 0.5, 3 * sigma);
}

TEST(Sampling, S5PointsInsideAndDeterministic) {
  const Region s = s5_region();
  const auto a = uniform_sample(s, 1000, 3);
  for (const auto& p : a.points)
    EXPECT_TRUE(region_contains(s, p));
  const auto b = uniform_sample(s, 1000, 3);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.seed, 3u);
  const auto c = uniform_sample(s, 1000, 4);
  EXPECT_NE(a.points, c.points);
}

TEST(Sampling, PrefixStable) {
  // a longer batch from the same seed extends the shorter one
  const auto a = uniform_sample(s5_region(), 100, 9);
  const auto b = uniform_sample(s5_region(), 200, 9);
  EXPECT_TRUE(std::equal(a.points.begin(), a.points.end(), b.points.begin()));
}

TEST(Sampling, StallOnNegligibleRegion) {
  // a sliver occupying ~1e-7 of its bounding box
  const Region r = Region::union_of({Region::rect({0, 0}, {1, 1}), Region::rect({1e4, 1e4}, {1e4 + 1, 1e4 + 1})});
  EXPECT_THROW((void)uniform_sample(r, 10, 0), RejectionStall);
}

TEST(DeepInterior, Examples) {
  EXPECT_TRUE(deep_interior(unit_square(), {0.5, 0.5}, 0.1));
  EXPECT_FALSE(deep_interior(unit_square(), {0.05, 0.5}, 0.1));
  EXPECT_FALSE(deep_interior(s5_region(), {0.5, 0.55}, 0.2));
  EXPECT_THROW((void)deep_interior(unit_square(), {0.5, 0.5}, 0.1, 8), std::invalid_argument);
}
