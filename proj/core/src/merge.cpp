#include "netfuzz/merge.hpp"

#include <algorithm>
#include <random>

#include "netfuzz/rng.hpp"

namespace netfuzz {

namespace {

// First compatible polarity wins, trying the rarer-to-hit side first: the
// polarity whose cube pins more inputs is the one random stimulus struggles
// with, and it is the side worth spending the merged pattern on (the easy
// side shows up in random tail cycles anyway). Ties fall back to 0-first.
bool try_merge_into(MergedPattern& bin, const ActivationPatterns::Entry& entry) {
  const std::size_t s0 = entry.cube0 ? entry.cube0->size() : 0;
  const std::size_t s1 = entry.cube1 ? entry.cube1->size() : 0;
  const bool try1_first = entry.cube1 && (!entry.cube0 || s1 > s0);

  const auto try0 = [&] {
    if (entry.cube0 && !cubes_conflict(bin.cube, *entry.cube0)) {
      bin.cube = cube_union(bin.cube, *entry.cube0);
      bin.members0.push_back(entry.net);
      return true;
    }
    return false;
  };
  const auto try1 = [&] {
    if (entry.cube1 && !cubes_conflict(bin.cube, *entry.cube1)) {
      bin.cube = cube_union(bin.cube, *entry.cube1);
      bin.members1.push_back(entry.net);
      return true;
    }
    return false;
  };
  return try1_first ? (try1() || try0()) : (try0() || try1());
}

}  // namespace

MergeResult merge_pattern(const Netlist& netlist, const ActivationPatterns& patterns,
                          bool multi_bin) {
  if (patterns.entries.empty()) throw ConfigError("merge_pattern over an empty pattern set");

  std::vector<const ActivationPatterns::Entry*> mergeable;
  for (const auto& entry : patterns.entries)
    if (entry.cube0 || entry.cube1) mergeable.push_back(&entry);

  // Fewest specified bits first keeps the merged cube X-rich.
  auto min_size = [](const ActivationPatterns::Entry& e) {
    std::size_t m = SIZE_MAX;
    if (e.cube0) m = std::min(m, e.cube0->size());
    if (e.cube1) m = std::min(m, e.cube1->size());
    return m;
  };
  std::stable_sort(mergeable.begin(), mergeable.end(),
                   [&](const ActivationPatterns::Entry* a, const ActivationPatterns::Entry* b) {
                     const std::size_t sa = min_size(*a), sb = min_size(*b);
                     if (sa != sb) return sa < sb;
                     return netlist.net(a->net).name < netlist.net(b->net).name;
                   });

  MergeResult result;
  for (const ActivationPatterns::Entry* entry : mergeable) {
    if (try_merge_into(result.primary, *entry)) continue;
    bool placed = false;
    if (multi_bin) {
      for (MergedPattern& bin : result.overflow)
        if ((placed = try_merge_into(bin, *entry))) break;
      if (!placed) {
        MergedPattern fresh;
        placed = try_merge_into(fresh, *entry);  // always fits an empty bin
        result.overflow.push_back(std::move(fresh));
      }
    }
    if (!placed) result.primary.conflicts.push_back(entry->net);
  }
  return result;
}

SeedPattern instantiate_seed(const Netlist& netlist, const MergedPattern& merged,
                             std::uint32_t cycles, FillPolicy fill, std::uint64_t rng_seed,
                             const ResetSpec& reset) {
  const auto pis = netlist.primary_inputs();
  const std::uint32_t reset_cycles = reset.enabled() ? reset.cycles : 0;
  if (cycles < reset_cycles + 1)
    throw ConfigError("seed length " + std::to_string(cycles) +
                      " leaves no cycle after the " + std::to_string(reset_cycles) +
                      "-cycle reset prologue");

  std::size_t reset_pos = SIZE_MAX;
  if (reset.enabled()) {
    const NetId rnet = netlist.net_by_name(reset.net);
    if (!netlist.is_primary_input(rnet))
      throw ConfigError("reset signal '" + reset.net + "' is not a primary input");
    reset_pos = std::find(pis.begin(), pis.end(), rnet) - pis.begin();
  }

  // Cube literals on flip-flop outputs cannot be driven directly; a random
  // warm-up segment before the activation cycle gives the state a chance to
  // wander there.
  bool wants_state = false;
  for (const auto& [net, value] : merged.cube.literals())
    if (!netlist.is_primary_input(net)) wants_state = true;
  const std::uint32_t body = cycles - reset_cycles;
  const std::uint32_t warmup = wants_state ? std::min(4u, body - 1) : 0;

  std::mt19937_64 rng(rng_seed);
  auto fill_bit = [&]() -> std::uint8_t {
    switch (fill) {
      case FillPolicy::Zeros: return 0;
      case FillPolicy::Ones: return 1;
      default: return rng_bit(rng) ? 1 : 0;
    }
  };

  SeedPattern out;
  out.fill_seed = rng_seed;
  out.vectors.reserve(cycles);
  for (std::uint32_t c = 0; c < cycles; ++c) {
    const bool in_reset = c < reset_cycles;
    const bool is_warmup = !in_reset && c < reset_cycles + warmup;
    const bool is_activation = c == reset_cycles + warmup;

    InputVector vec(pis.size());
    for (std::size_t i = 0; i < pis.size(); ++i)
      vec[i] = is_warmup ? (rng_bit(rng) ? 1 : 0) : fill_bit();

    if (is_activation) {
      for (const auto& [net, value] : merged.cube.literals()) {
        const auto it = std::find(pis.begin(), pis.end(), net);
        if (it != pis.end()) vec[it - pis.begin()] = value ? 1 : 0;
      }
    }
    if (reset_pos != SIZE_MAX) {
      const std::uint8_t active = reset.active_high ? 1 : 0;
      if (in_reset)
        vec[reset_pos] = active;
      else if (!is_activation || !merged.cube.get(pis[reset_pos]))
        vec[reset_pos] = active ^ 1;
    }
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace netfuzz
