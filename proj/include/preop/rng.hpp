#pragma once

#include <cstdint>

namespace preop {

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators", 2014).  Chosen because the algorithm is published, tiny and
/// bit-stable across platforms and releases, so every randomized trial in
/// the suite replays from (seed, draw position) alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) by rejection; unbiased, n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform draw from the closed interval [lo, hi].
  long long in_range(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(below(span));
  }

  /// Deterministic derived seed for an independent stream.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2)));
    return s.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace preop
