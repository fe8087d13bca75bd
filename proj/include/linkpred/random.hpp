#pragma once
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace linkpred {

/** Engine used everywhere a seeded random stream is needed. */
using Rng = std::mt19937_64;

/**
 * Uniform integer in [0, n) by rejection, so results do not depend on the
 * standard library's distribution implementation.
 */
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

/** Uniform real in [0, 1) with 53 random bits. */
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/** SplitMix64 finalizer; used to derive independent seeds from one base seed. */
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(a) ^ (b + 0x632be59bd9b4e019ULL));
}

}  // namespace linkpred
