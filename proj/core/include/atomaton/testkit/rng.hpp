#pragma once

#include <cstdint>

namespace atomaton::testkit {

/// SplitMix64. The output sequence is fixed by the seed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// next() % n; n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

  bool chance(double p) noexcept { return uniform01() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace atomaton::testkit
