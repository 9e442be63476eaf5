#pragma once

#include <cstdint>

namespace gamedec {

/// splitmix64 stream. Self-contained so generated games are bit-identical
/// across platforms and standard libraries; std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t reject_under = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= reject_under) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent child stream. Advances this stream; derivation order is
  /// part of the generator's determinism contract.
  Rng split(std::uint64_t salt) {
    return Rng(next() ^ (0x9e3779b97f4a7c15ULL * (2 * salt + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace gamedec
