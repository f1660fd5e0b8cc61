#include <benchmark/benchmark.h>

#include <random>

#include "netfuzz/atpg.hpp"
#include "netfuzz/rng.hpp"
#include "netfuzz/synth.hpp"

using namespace netfuzz;

static void BM_JustifyMultiplier(benchmark::State& state) {
  const Netlist nl = gen_multiplier(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(3);
  std::uint64_t satisfied = 0;
  for (auto _ : state) {
    NetId net;
    do {
      net = static_cast<NetId>(rng_below(rng, nl.net_count()));
    } while (nl.is_const_driven(net));
    const AtpgResult r = justify(nl, {net, rng_bit(rng)});
    satisfied += r.outcome == AtpgOutcome::Satisfied;
    benchmark::DoNotOptimize(r.cube.size());
  }
  state.counters["satisfied"] = static_cast<double>(satisfied);
}
BENCHMARK(BM_JustifyMultiplier)->Arg(8)->Arg(16);

static void BM_ActivationBatch(benchmark::State& state) {
  const Netlist nl = gen_multiplier(12);
  std::mt19937_64 rng(4);
  std::vector<NetId> targets;
  while (targets.size() < 50) {
    const NetId id = static_cast<NetId>(rng_below(rng, nl.net_count()));
    if (!nl.is_const_driven(id)) targets.push_back(id);
  }
  for (auto _ : state) {
    const ActivationPatterns pats = gen_activation_patterns(nl, targets);
    benchmark::DoNotOptimize(pats.entries.size());
  }
}
BENCHMARK(BM_ActivationBatch);

BENCHMARK_MAIN();
