#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "netfuzz/seed.hpp"

namespace netfuzz {

/// AFL-style stages over the seed's flattened bitstring, plus hardware-shaped
/// cycle stages that change the stimulus length.
enum class MutStage : std::uint8_t {
  BitFlip1,
  BitFlip2,
  BitFlip4,
  ByteFlip1,
  ByteFlip2,
  ByteFlip4,
  Arith8,
  Arith16,
  Arith32,
  Interesting8,
  Interesting16,
  Interesting32,
  Havoc,
  CycleDup,
  CycleDrop,
  CycleSplice,
};

const char* to_string(MutStage stage);

struct MutationConfig {
  bool cycle_stages = false;     // dup/drop/splice participate when true
  std::uint32_t max_cycles = 64;
  std::uint32_t havoc_min = 2;
  std::uint32_t havoc_max = 128;
};

/// The deterministic stage rotation used by the campaign scheduler.
std::span<const MutStage> mutation_schedule(const MutationConfig& config);

/// Applies one stage at an rng-chosen position. Width is always preserved;
/// the cycle count changes only through the cycle stages, within
/// [1, config.max_cycles]. Identical rng state gives identical mutants.
SeedVectors mutate(const SeedVectors& vectors, MutStage stage, std::mt19937_64& rng,
                   const MutationConfig& config = {});

}  // namespace netfuzz
