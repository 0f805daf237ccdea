#pragma once

#include <cstdint>

namespace affaut {

/// Deterministic splitmix64 generator. Output is identical across platforms
/// for a given seed, which the golden-file tests rely on; std::mt19937 with
/// standard distributions would not give that guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling keeps the distribution exact
    std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace affaut
