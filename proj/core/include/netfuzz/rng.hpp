#pragma once

#include <cstdint>
#include <random>

namespace netfuzz {

/// All randomized code in this project draws through these helpers instead of
/// std::*_distribution, whose outputs are implementation-defined. mt19937_64
/// itself is pinned by the standard, so seeds, mutants and samples are
/// bit-identical across platforms and standard libraries.

inline std::uint64_t rng_u64(std::mt19937_64& rng) { return rng(); }

/// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling on the top of the range to stay unbiased.
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline bool rng_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

/// Derives an independent substream for task `index` of a campaign.
inline std::mt19937_64 rng_substream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over (seed, index); decorrelates neighbouring indices.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return std::mt19937_64(z ^ (z >> 31));
}

}  // namespace netfuzz
