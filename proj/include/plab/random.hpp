#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "plab/bitvec.hpp"

namespace plab {

/// The one random engine used across the lab. std::mt19937_64's output
/// sequence is fixed by the standard, so seeded runs are portable; the
/// helpers below avoid std::*_distribution, whose algorithms are not.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t random_bits(Rng& rng, unsigned count) { return rng() & low_mask(count); }

/// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

inline BitVec random_bitvec(Rng& rng, std::size_t size) {
  BitVec v(size);
  for (std::size_t i = 0; i < size; i += 64) {
    const auto n = static_cast<unsigned>(size - i < 64 ? size - i : 64);
    v.deposit(i, n, random_bits(rng, n));
  }
  return v;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for a named sub-experiment.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) h = (h ^ c) * 0x100000001b3ULL;
  return splitmix64(seed ^ h);
}

}  // namespace plab
