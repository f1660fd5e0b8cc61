#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netfuzz/atpg.hpp"
#include "netfuzz/cube.hpp"
#include "netfuzz/seed.hpp"
#include "netfuzz/simulator.hpp"

namespace netfuzz {

/// One merged activation bin: a conflict-free union cube plus the nets it
/// activates at 0 and at 1. Every member's chosen-polarity cube is subsumed by
/// `cube`. `conflicts` carries the campaign-level excluded set and is only
/// populated on the primary bin.
struct MergedPattern {
  Cube cube;
  std::vector<NetId> members0;  // activated to 0
  std::vector<NetId> members1;  // activated to 1
  std::vector<NetId> conflicts;
};

struct MergeResult {
  MergedPattern primary;
  std::vector<MergedPattern> overflow;  // multi-bin mode only

  std::vector<NetId> conflicted() const { return primary.conflicts; }
  std::size_t bin_count() const { return 1 + overflow.size(); }
};

/// Greedy don't-care-preserving merge: nets are taken in ascending order of
/// their smallest cube (fewest specified bits first, ties by net name); each
/// net tries its rarer polarity first (the cube with more specified bits),
/// then the other, against the primary bin. In multi-bin mode a net that fits
/// no existing bin opens a new overflow bin; otherwise it lands in conflicts.
/// Nets with no Satisfied cube never merge.
MergeResult merge_pattern(const Netlist& netlist, const ActivationPatterns& patterns,
                          bool multi_bin = false);

enum class FillPolicy : std::uint8_t { Random, Zeros, Ones };

/// Multi-cycle stimulus realizing a merged pattern: reset prologue, optional
/// warm-up (when the cube constrains flip-flop outputs, which a stimulus can
/// only bias, not force), the activation vector carrying the cube's PI bits
/// verbatim, then tail filler. `cycles` is the total seed length and must
/// leave at least one post-reset cycle. Deterministic under rng_seed.
struct SeedPattern {
  SeedVectors vectors;
  std::string origin;
  std::uint64_t fill_seed = 0;
};

SeedPattern instantiate_seed(const Netlist& netlist, const MergedPattern& merged,
                             std::uint32_t cycles, FillPolicy fill, std::uint64_t rng_seed,
                             const ResetSpec& reset = {});

}  // namespace netfuzz
