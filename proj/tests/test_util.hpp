#pragma once

#include "rectihull/geom.hpp"
#include "rectihull/random.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

inline std::vector<rectihull::Point2> random_points(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                                    double hi = 1.0) {
  rectihull::CounterRng rng(seed, 100);
  std::vector<rectihull::Point2> pts(n);
  for (auto& p : pts)
    p = {rng.uniform(lo, hi), rng.uniform(lo, hi)};
  return pts;
}

inline std::vector<rectihull::Point2> rect_corners() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

inline std::vector<rectihull::Point2> l_shape() {
  return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}

} // namespace testutil
