#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netfuzz/merge.hpp"
#include "netfuzz/mutate.hpp"
#include "netfuzz/netlist.hpp"
#include "netfuzz/seed.hpp"
#include "netfuzz/simulator.hpp"

namespace netfuzz {

enum class FuzzMode : std::uint8_t {
  Directed,  // ATPG-seeded, target-net feedback
  Random,    // uniform seeds and mutants, same retention rule
  Cgf,       // feedback over all non-constant nets, reporting over targets
};

const char* to_string(FuzzMode mode);
std::optional<FuzzMode> fuzz_mode_from(std::string_view text);

struct CampaignConfig {
  double coverage_goal = 90.0;                    // percent of targets fully toggled
  std::optional<std::uint64_t> time_budget_ms;    // wall clock
  std::optional<std::uint64_t> max_iterations;    // simulated runs
  MutationConfig mutation;
  std::uint32_t workers = 1;
  std::uint64_t rng_seed = 1;
  FuzzMode mode = FuzzMode::Directed;
  std::uint32_t baseline_seed_count = 8;  // initial pool size for random/cgf
  std::uint32_t seed_cycles = 8;          // cycles per generated baseline seed
  ResetSpec reset;                        // applied to every simulation when set

  /// goal in (0,100], workers >= 1, and at least one of time/iteration bounds.
  void validate() const;
};

/// Timeline rows are fully deterministic: virtual_ms is simulation time at one
/// millisecond per simulated cycle. Host wall-clock lives only in
/// CampaignResult::elapsed_wall_ms.
struct TimelinePoint {
  std::uint64_t virtual_ms = 0;
  std::uint64_t iterations = 0;
  std::uint64_t cycles = 0;
  double coverage_pct = 0.0;
};

struct CampaignResult {
  std::vector<Seed> archive;           // admitted runs, admission order
  std::vector<Seed> pool;              // final queue (initial + admitted)
  CoverageMap coverage;                // final flags over the monitor set
  std::vector<NetId> targets;          // reporting subset
  std::vector<TimelinePoint> timeline;
  std::string termination_reason;      // coverage_goal | time_budget | max_iterations
  std::uint64_t iterations = 0;
  std::uint64_t total_cycles = 0;
  double final_coverage = 0.0;
  std::uint64_t cycles_to_goal = kNeverHit;
  std::optional<std::uint64_t> last_admitted;  // most recently admitted seed id
  std::uint64_t elapsed_wall_ms = 0;           // measured, not deterministic
  FuzzMode mode = FuzzMode::Directed;
  double goal = 90.0;

  bool goal_reached() const { return termination_reason == "coverage_goal"; }
};

/// The directed fuzzing loop: instantiated activation patterns form the seed
/// pool, every round mutates each pool member once, runs it, and admits the
/// mutant when cumulative target coverage strictly increases. Admitted runs
/// join both the pool and the archive. Terminates on goal, wall-clock budget,
/// or iteration bound.
CampaignResult run_campaign(const Netlist& netlist, std::span<const NetId> targets,
                            const std::vector<SeedPattern>& initial_patterns,
                            const CampaignConfig& config);

/// Random and CGF baselines; targets are monitored for reporting either way.
CampaignResult run_baseline(const Netlist& netlist, std::span<const NetId> targets,
                            const CampaignConfig& config);

/// Simulates the archive in admission order against a fresh map; with the
/// campaign's monitor set and reset this reproduces the final coverage
/// exactly.
CoverageMap replay_archive(const Netlist& netlist, std::span<const NetId> monitor,
                           std::span<const Seed> archive, const ResetSpec& reset = {});

}  // namespace netfuzz
