#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netfuzz {

/// One clock cycle of primary-input values, netlist declaration order, one
/// byte per PI holding 0 or 1.
using InputVector = std::vector<std::uint8_t>;

/// A multi-cycle stimulus: vectors[cycle][pi].
using SeedVectors = std::vector<InputVector>;

/// FNV-1a over width and content; the corpus identity of a seed.
std::uint64_t seed_hash(const SeedVectors& vectors);

std::string seed_id_string(std::uint64_t id);  // 16 hex digits

/// Corpus member: a stimulus plus its fuzzing provenance.
struct Seed {
  SeedVectors vectors;
  std::uint64_t id = 0;
  std::optional<std::uint64_t> parent;
  double gained = 0.0;  // coverage percentage points added at admission

  static Seed from_vectors(SeedVectors v, std::optional<std::uint64_t> parent_id = {});
};

}  // namespace netfuzz
