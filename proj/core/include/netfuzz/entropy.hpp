#pragma once

#include <cstdint>
#include <vector>

#include "netfuzz/netlist.hpp"

namespace netfuzz {

/// Per-net Shannon entropy in [0,1], estimated by driving every PI with
/// independent uniform random bits for `cycles` clock cycles from the all-zero
/// flip-flop state. H = -p*log2(p) - (1-p)*log2(1-p) with H = 0 exactly when a
/// net never moves. Deterministic for a fixed rng_seed.
std::vector<double> estimate_entropy(const Netlist& netlist, std::uint64_t cycles,
                                     std::uint64_t rng_seed);

/// Binary entropy of a probability (0 at p in {0,1}).
double binary_entropy(double p);

}  // namespace netfuzz
