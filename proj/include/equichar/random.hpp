#pragma once

// Seeded generator with a platform-independent integer helper, so that a seed
// reproduces the same instances everywhere (std distributions are
// implementation-defined).

#include <cstdint>
#include <random>

#include "equichar/arith.hpp"

namespace equichar {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Seed for the k-th independent stream derived from `seed` (splitmix64).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi]; the modulo bias is negligible for the ranges used here.
  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(gen_() % span);
  }

  /// True with probability num/den.
  bool chance(Int num, Int den) { return uniform(0, den - 1) < num; }

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace equichar
