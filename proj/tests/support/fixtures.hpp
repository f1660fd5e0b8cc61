#pragma once

// Shared fixtures: paths into circuits/, the frozen synthetic benchmark specs
// standing in for the classic mid-size circuits, and small helpers used by
// several suites.

#include <string>

#include "netfuzz/bench.hpp"
#include "netfuzz/netlist.hpp"
#include "netfuzz/synth.hpp"

#ifndef NETFUZZ_CIRCUITS_DIR
#define NETFUZZ_CIRCUITS_DIR "circuits"
#endif

namespace fixtures {

inline std::string circuit_path(const std::string& name) {
  return std::string(NETFUZZ_CIRCUITS_DIR) + "/" + name;
}

inline netfuzz::Netlist c17() { return netfuzz::parse_bench_file(circuit_path("c17.bench")); }
inline netfuzz::Netlist s27() { return netfuzz::parse_bench_file(circuit_path("s27.bench")); }

/// Combinational benchmark at the classic interrupt-controller scale:
/// 36 PIs, 7 POs, 160 gates, NAND-heavy with occasional wide gates.
inline netfuzz::Netlist c432_scale(std::uint64_t seed = 432) {
  netfuzz::RandomNetlistSpec spec;
  spec.name = "c432s";
  spec.inputs = 36;
  spec.outputs = 7;
  spec.gates = 160;
  spec.max_arity = 9;
  spec.wide_gate_prob = 0.30;
  spec.recent_bias = 0.7;
  spec.recent_window = 24;
  spec.rng_seed = seed;
  return netfuzz::gen_random_netlist(spec);
}

/// Sequential benchmark at the s344 scale: 9 PIs, 11 POs, 15 flip-flops,
/// 160 combinational gates.
inline netfuzz::Netlist s344_scale(std::uint64_t seed = 344) {
  netfuzz::RandomNetlistSpec spec;
  spec.name = "s344s";
  spec.inputs = 9;
  spec.outputs = 11;
  spec.gates = 160;
  spec.dffs = 15;
  spec.max_arity = 5;
  spec.wide_gate_prob = 0.12;
  spec.recent_bias = 0.65;
  spec.recent_window = 24;
  spec.rng_seed = seed;
  spec.reset_input = true;
  return netfuzz::gen_random_netlist(spec);
}

/// Multiplier in the c6288 class (~2300 gates), >2000 selectable nets.
inline netfuzz::Netlist c6288_scale() { return netfuzz::gen_multiplier(20, "mult20"); }

/// Small circuits for exhaustive oracles.
inline netfuzz::Netlist small_random(std::uint64_t seed, std::uint32_t pis = 8,
                                     std::uint32_t gates = 60) {
  netfuzz::RandomNetlistSpec spec;
  spec.name = "rand" + std::to_string(seed);
  spec.inputs = pis;
  spec.outputs = 4;
  spec.gates = gates;
  spec.max_arity = 4;
  spec.rng_seed = seed;
  return netfuzz::gen_random_netlist(spec);
}

}  // namespace fixtures
