// Small end-to-end run: sample the s5 set, build its pi/4 hull, compare the
// estimate against the truth and scan angles. Prints a few numbers.

#include "rectihull/rectihull.hpp"

#include <cstdio>
#include <numbers>

int main() {
  using namespace rectihull;
  const Region s = s5_region();
  const auto batch = uniform_sample(s, 1000, 7);
  const auto hull = build_hull(batch.points, std::numbers::pi / 4);

  std::printf("area(S)           %.5f\n", region_area(s, 200000, 0).value);
  std::printf("area(hull)        %.5f\n", hull.area());
  std::printf("extremal points   %zu of %zu\n", hull.extremal_indices().size(), batch.points.size());
  std::printf("d_mu(hull, S)     %.5f\n",
              dmu_mc(membership_of(hull), membership_of(s), s.bounds(), 50000, 7).value);

  const auto scan = estimate_angle(batch.points, 30);
  std::printf("estimated angle   %.4f (pi/4 = %.4f)\n", scan.argmin_theta, std::numbers::pi / 4);
}
