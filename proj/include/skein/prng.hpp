#pragma once

// SplitMix64 (Steele, Lea, Flood 2014).  Every randomized check in the
// project draws from this generator so that a 64-bit seed reproduces the
// same samples on every platform.  `split()` derives an independent stream
// for a sub-check without disturbing the parent sequence beyond one draw.

#include <cstdint>

namespace skein {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }

 private:
  std::uint64_t state_;
};

}  // namespace skein
