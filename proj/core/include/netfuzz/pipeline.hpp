#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netfuzz/atpg.hpp"
#include "netfuzz/fuzz.hpp"
#include "netfuzz/merge.hpp"
#include "netfuzz/report.hpp"
#include "netfuzz/select.hpp"
#include "netfuzz/submodule.hpp"

namespace netfuzz {

/// Both algorithm knobs and plumbing for a full directed run.
struct PipelineOptions {
  SelectionConfig selection;
  bool submodule = false;
  bool multi_bin = false;
  AtpgLimits atpg;
  CampaignConfig campaign;
  ResetSpec reset;
  FillPolicy fill = FillPolicy::Random;
  std::uint32_t seed_cycles = 8;  // post-reset cycles per instantiated seed
};

/// Target selection, pattern generation and merge, no fuzzing. The returned
/// ids always refer to the main design.
struct PatternRun {
  TargetSet selected;                 // T_N before conflict removal
  std::vector<NetId> final_targets;   // T_N after N_C removal
  std::vector<MergedPattern> bins;    // cubes over main-design inputs
  std::vector<NetId> n0, n1;
  std::vector<NetId> conflicted;      // N_C
  std::vector<NetId> untestable;      // kept in T_N, excluded from merging
  std::optional<ActivationPatterns> raw;  // per-net cubes (non-submodule path)
  std::optional<SubNetlist> sub;      // present when the submodule path ran
};

PatternRun run_pattern_generation(const Netlist& netlist, const SelectionConfig& selection,
                                  bool submodule, bool multi_bin, AtpgLimits limits = {});

/// Instantiates one seed per non-empty bin.
std::vector<SeedPattern> instantiate_bins(const Netlist& netlist, const PatternRun& run,
                                          std::uint32_t seed_cycles, FillPolicy fill,
                                          std::uint64_t rng_seed, const ResetSpec& reset);

/// The whole flow: select, generate, merge, instantiate, fuzz, report.
struct PipelineRun {
  PatternRun patterns;
  std::vector<SeedPattern> seeds;
  CampaignResult campaign;
  CampaignReport report;
};

PipelineRun run_pipeline(const Netlist& netlist, const PipelineOptions& options);

/// Baseline flow sharing the selection and reporting machinery.
PipelineRun run_baseline_pipeline(const Netlist& netlist, const PipelineOptions& options);

}  // namespace netfuzz
