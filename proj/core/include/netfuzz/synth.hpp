#pragma once

#include <cstdint>
#include <string>

#include "netfuzz/netlist.hpp"

namespace netfuzz {

/// Deterministic random netlist in the ISCAS85/89 style: NAND-dominant gate
/// mix, occasional wide gates, depth-biased wiring, optional flip-flops whose
/// outputs feed back into the logic.
struct RandomNetlistSpec {
  std::string name = "synth";
  std::uint32_t inputs = 8;
  std::uint32_t outputs = 4;
  std::uint32_t gates = 100;   // combinational gates, flip-flops extra
  std::uint32_t dffs = 0;
  std::uint32_t max_arity = 5;
  double wide_gate_prob = 0.15;  // arity above 2, up to max_arity
  double recent_bias = 0.7;      // chance an input taps the most recent nets
  std::uint32_t recent_window = 24;
  std::uint64_t rng_seed = 1;
  bool reset_input = false;  // adds a dedicated "rst" PI for the global reset rail
};

Netlist gen_random_netlist(const RandomNetlistSpec& spec);

/// Real combinational array multiplier (ripple-carry rows of half/full
/// adders); width 20 lands in the couple-of-thousand-gate class.
Netlist gen_multiplier(std::uint32_t width, const std::string& name = "");

}  // namespace netfuzz
