#pragma once

#include <cstdint>

namespace rectihull {

/// Counter-based generator: draw i of stream `key` is mix(key + i * gamma)
/// (the SplitMix64 output function). Streams are addressed by (seed, tag),
/// so any batch can be regenerated independently of evaluation order.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t tag = 0)
      : key_(mix(mix(seed) ^ (tag * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull))) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  [[nodiscard]] std::uint64_t draws() const noexcept { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Stream tags, so sampling and Monte Carlo draws for one seed never overlap.
namespace stream {
inline constexpr std::uint64_t kSample = 1;
inline constexpr std::uint64_t kMeasure = 2;
inline constexpr std::uint64_t kArea = 3;
inline constexpr std::uint64_t kAlphaArea = 4;
} // namespace stream

} // namespace rectihull
