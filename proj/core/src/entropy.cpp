#include "netfuzz/entropy.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "netfuzz/rng.hpp"

namespace netfuzz {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// All stimulus is binary and flip-flops start at 0, so no X can appear and the
// estimate runs on plain 2-valued logic. The 64 lanes of a word are 64
// independent simulation streams advancing one cycle per block, each from the
// all-zero reset state; their 1-counts merge by addition. `cycles` counts the
// total sampled net-cycles across streams.
std::vector<double> estimate_entropy(const Netlist& netlist, std::uint64_t cycles,
                                     std::uint64_t rng_seed) {
  if (cycles < 1) throw ConfigError("entropy estimation needs at least one cycle");

  const std::size_t n_nets = netlist.net_count();
  std::vector<GateId> comb;
  for (GateId g : topological_sort(netlist))
    if (netlist.gate(g).kind != GateKind::Dff) comb.push_back(g);

  std::vector<std::uint64_t> word(n_nets, 0);
  std::vector<std::uint64_t> ones(n_nets, 0);
  std::vector<std::uint64_t> state(netlist.dff_count(), 0);  // all-zero reset

  std::mt19937_64 rng(rng_seed);
  const auto pis = netlist.primary_inputs();
  const auto dffs = netlist.dff_gates();

  std::uint64_t remaining = cycles;
  while (remaining > 0) {
    const unsigned lanes = remaining >= 64 ? 64u : static_cast<unsigned>(remaining);
    const std::uint64_t mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);

    for (NetId pi : pis) word[pi] = rng_u64(rng) & mask;
    for (std::size_t i = 0; i < dffs.size(); ++i)
      word[netlist.gate(dffs[i]).output] = state[i] & mask;

    for (GateId g : comb) {
      const Gate& gate = netlist.gate(g);
      std::uint64_t v;
      switch (gate.kind) {
        case GateKind::Const0: v = 0; break;
        case GateKind::Const1: v = mask; break;
        case GateKind::Not: v = ~word[gate.inputs[0]] & mask; break;
        case GateKind::Buf: v = word[gate.inputs[0]]; break;
        case GateKind::And:
        case GateKind::Nand: {
          v = mask;
          for (NetId in : gate.inputs) v &= word[in];
          if (gate.kind == GateKind::Nand) v = ~v & mask;
          break;
        }
        case GateKind::Or:
        case GateKind::Nor: {
          v = 0;
          for (NetId in : gate.inputs) v |= word[in];
          if (gate.kind == GateKind::Nor) v = ~v & mask;
          break;
        }
        default: {
          v = 0;
          for (NetId in : gate.inputs) v ^= word[in];
          if (gate.kind == GateKind::Xnor) v = ~v & mask;
          break;
        }
      }
      word[gate.output] = v;
    }

    for (NetId id = 0; id < n_nets; ++id)
      ones[id] += static_cast<std::uint64_t>(std::popcount(word[id] & mask));

    // Each lane latches its own next state.
    for (std::size_t i = 0; i < dffs.size(); ++i)
      state[i] = word[netlist.gate(dffs[i]).inputs[0]];

    remaining -= lanes;
  }

  std::vector<double> entropy(n_nets, 0.0);
  for (NetId id = 0; id < n_nets; ++id)
    entropy[id] = binary_entropy(static_cast<double>(ones[id]) / static_cast<double>(cycles));
  return entropy;
}

}  // namespace netfuzz
