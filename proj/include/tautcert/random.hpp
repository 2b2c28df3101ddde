// Deterministic seeded generator for sample grids and property tests.
// Avoids std::uniform_int_distribution so streams are identical across
// standard library implementations.
#pragma once

#include <cstdint>

namespace tautcert {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; bias is irrelevant for sampling.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace tautcert
