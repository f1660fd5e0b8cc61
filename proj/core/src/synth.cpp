#include "netfuzz/synth.hpp"

#include <algorithm>
#include <random>
#include <span>

#include "netfuzz/rng.hpp"

namespace netfuzz {

namespace {

GateKind pick_kind(std::mt19937_64& rng, bool wide) {
  // NAND-heavy mix in the spirit of the classic combinational benchmarks;
  // wide gates come from the non-parity families.
  static constexpr std::pair<GateKind, std::uint32_t> narrow[] = {
      {GateKind::Nand, 30}, {GateKind::And, 16}, {GateKind::Nor, 12}, {GateKind::Or, 10},
      {GateKind::Not, 14},  {GateKind::Xor, 6},  {GateKind::Xnor, 4}, {GateKind::Buf, 4},
  };
  static constexpr std::pair<GateKind, std::uint32_t> broad[] = {
      {GateKind::Nand, 30},
      {GateKind::And, 16},
      {GateKind::Nor, 12},
      {GateKind::Or, 10},
  };
  const auto pick = [&rng](std::span<const std::pair<GateKind, std::uint32_t>> table) {
    std::uint32_t total = 0;
    for (const auto& [kind, w] : table) total += w;
    std::uint64_t roll = rng_below(rng, total);
    for (const auto& [kind, w] : table) {
      if (roll < w) return kind;
      roll -= w;
    }
    return GateKind::Nand;
  };
  return wide ? pick(broad) : pick(narrow);
}

}  // namespace

Netlist gen_random_netlist(const RandomNetlistSpec& spec) {
  if (spec.inputs < 1 || spec.gates < 1) throw ConfigError("generator needs inputs and gates");
  NetlistBuilder builder(spec.name);
  std::mt19937_64 rng(spec.rng_seed);

  std::vector<NetId> sources;  // nets a new gate may read
  for (std::uint32_t i = 0; i < spec.inputs; ++i) {
    const NetId id = builder.add_net("in" + std::to_string(i));
    builder.mark_input(id);
    sources.push_back(id);
  }
  if (spec.reset_input) {
    // bare rail: the simulator's global reset forces flip-flops, so no gate
    // consumes it
    builder.mark_input(builder.add_net("rst"));
  }
  std::vector<NetId> state_nets;
  for (std::uint32_t i = 0; i < spec.dffs; ++i) {
    const NetId id = builder.add_net("ff" + std::to_string(i));
    state_nets.push_back(id);
    sources.push_back(id);
  }

  auto pick_source = [&]() -> NetId {
    if (sources.size() > spec.recent_window &&
        rng_below(rng, 1000) < static_cast<std::uint64_t>(spec.recent_bias * 1000)) {
      const std::size_t lo = sources.size() - spec.recent_window;
      return sources[lo + rng_below(rng, spec.recent_window)];
    }
    return sources[rng_below(rng, sources.size())];
  };

  std::vector<NetId> gate_outputs;
  for (std::uint32_t g = 0; g < spec.gates; ++g) {
    const bool wide =
        spec.max_arity > 2 &&
        rng_below(rng, 1000) < static_cast<std::uint64_t>(spec.wide_gate_prob * 1000);
    const GateKind kind = pick_kind(rng, wide);
    std::uint32_t arity = 1;
    if (!is_unary(kind)) {
      arity = 2;
      if (wide) arity = 3 + static_cast<std::uint32_t>(rng_below(rng, spec.max_arity - 2));
    }
    std::vector<NetId> inputs;
    while (inputs.size() < arity) {
      const NetId candidate = pick_source();
      if (std::find(inputs.begin(), inputs.end(), candidate) == inputs.end())
        inputs.push_back(candidate);
      else if (sources.size() <= arity)  // tiny pools cannot stay distinct
        inputs.push_back(candidate);
    }
    const NetId out = builder.add_net("n" + std::to_string(g));
    builder.add_gate(kind, out, std::move(inputs));
    sources.push_back(out);
    gate_outputs.push_back(out);
  }

  for (std::uint32_t i = 0; i < spec.dffs; ++i) {
    const NetId data = gate_outputs.empty()
                           ? sources[rng_below(rng, sources.size())]
                           : gate_outputs[rng_below(rng, gate_outputs.size())];
    builder.add_gate(GateKind::Dff, state_nets[i], {data});
  }

  // Prefer sink-less nets as outputs, newest first; top up from the tail.
  std::vector<NetId> chosen;
  for (auto it = gate_outputs.rbegin(); it != gate_outputs.rend() && chosen.size() < spec.outputs;
       ++it)
    chosen.push_back(*it);
  for (NetId id : chosen) builder.mark_output(id);

  return builder.finish();
}

Netlist gen_multiplier(std::uint32_t width, const std::string& name) {
  if (width < 2) throw ConfigError("multiplier width must be >= 2");
  NetlistBuilder b(name.empty() ? "mult" + std::to_string(width) : name);

  std::vector<NetId> a(width), bb(width);
  for (std::uint32_t i = 0; i < width; ++i) {
    a[i] = b.add_net("a" + std::to_string(i));
    b.mark_input(a[i]);
  }
  for (std::uint32_t i = 0; i < width; ++i) {
    bb[i] = b.add_net("b" + std::to_string(i));
    b.mark_input(bb[i]);
  }

  auto pp = [&](std::uint32_t i, std::uint32_t j) {
    const NetId out = b.add_net("pp_" + std::to_string(i) + "_" + std::to_string(j));
    b.add_gate(GateKind::And, out, {a[j], bb[i]});
    return out;
  };

  std::uint32_t cell = 0;
  auto half_add = [&](NetId x, NetId y, NetId& carry_out) {
    const std::string tag = std::to_string(cell++);
    const NetId sum = b.add_net("hs" + tag);
    b.add_gate(GateKind::Xor, sum, {x, y});
    carry_out = b.add_net("hc" + tag);
    b.add_gate(GateKind::And, carry_out, {x, y});
    return sum;
  };
  auto full_add = [&](NetId x, NetId y, NetId z, NetId& carry_out) {
    const std::string tag = std::to_string(cell++);
    const NetId t = b.add_net("fx" + tag);
    b.add_gate(GateKind::Xor, t, {x, y});
    const NetId sum = b.add_net("fs" + tag);
    b.add_gate(GateKind::Xor, sum, {t, z});
    const NetId c1 = b.add_net("fa" + tag);
    b.add_gate(GateKind::And, c1, {x, y});
    const NetId c2 = b.add_net("fb" + tag);
    b.add_gate(GateKind::And, c2, {t, z});
    carry_out = b.add_net("fc" + tag);
    b.add_gate(GateKind::Or, carry_out, {c1, c2});
    return sum;
  };

  std::vector<NetId> acc(2 * width, kNoNet);
  for (std::uint32_t j = 0; j < width; ++j) acc[j] = pp(0, j);
  for (std::uint32_t i = 1; i < width; ++i) {
    NetId carry = kNoNet;
    for (std::uint32_t j = 0; j < width; ++j) {
      const std::uint32_t pos = i + j;
      const NetId term = pp(i, j);
      if (acc[pos] == kNoNet && carry == kNoNet) {
        acc[pos] = term;
      } else if (carry == kNoNet) {
        acc[pos] = half_add(acc[pos], term, carry);
      } else if (acc[pos] == kNoNet) {
        acc[pos] = half_add(term, carry, carry);
      } else {
        acc[pos] = full_add(acc[pos], term, carry, carry);
      }
    }
    acc[i + width] = carry;  // ripple out of the row
  }

  for (std::uint32_t p = 0; p < 2 * width; ++p)
    if (acc[p] != kNoNet) b.mark_output(acc[p]);
  return b.finish();
}

}  // namespace netfuzz
