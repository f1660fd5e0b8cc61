#include "netfuzz/pipeline.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace netfuzz {

namespace {

std::vector<NetId> remove_conflicted(const std::vector<NetId>& selected,
                                     const std::vector<NetId>& conflicted) {
  std::unordered_set<NetId> drop(conflicted.begin(), conflicted.end());
  std::vector<NetId> kept;
  kept.reserve(selected.size());
  for (NetId id : selected)
    if (!drop.count(id)) kept.push_back(id);
  return kept;
}

}  // namespace

PatternRun run_pattern_generation(const Netlist& netlist, const SelectionConfig& selection,
                                  bool submodule, bool multi_bin, AtpgLimits limits) {
  PatternRun run;
  run.selected = target_net_selection(netlist, selection);

  if (submodule) {
    run.sub = extract_submodule(netlist, run.selected.members);
    SubmodulePatterns sp = pattern_generation_submodule(netlist, *run.sub, multi_bin, limits);
    run.bins = std::move(sp.bins);
    run.n0 = std::move(sp.n0);
    run.n1 = std::move(sp.n1);
    run.conflicted = std::move(sp.conflicted);
    // Untestable at submodule scope: selected nets in no bin and not conflicted.
    std::unordered_set<NetId> placed(run.n0.begin(), run.n0.end());
    placed.insert(run.n1.begin(), run.n1.end());
    placed.insert(run.conflicted.begin(), run.conflicted.end());
    for (NetId id : run.selected.members)
      if (!placed.count(id)) run.untestable.push_back(id);
  } else {
    const std::vector<GateId> topo = topological_sort(netlist);
    get_id(netlist, topo, run.selected.members);
    ActivationPatterns pats = gen_activation_patterns(netlist, run.selected.members, limits);
    MergeResult merged = merge_pattern(netlist, pats, multi_bin);
    run.conflicted = merged.primary.conflicts;
    run.untestable = pats.untestable;
    run.raw = std::move(pats);
    run.bins.push_back(std::move(merged.primary));
    for (MergedPattern& bin : merged.overflow) run.bins.push_back(std::move(bin));
    for (const MergedPattern& bin : run.bins) {
      run.n0.insert(run.n0.end(), bin.members0.begin(), bin.members0.end());
      run.n1.insert(run.n1.end(), bin.members1.begin(), bin.members1.end());
    }
  }

  run.final_targets = remove_conflicted(run.selected.members, run.conflicted);
  if (run.final_targets.empty())
    throw ConfigError("every selected target was conflicted away; nothing to fuzz");
  return run;
}

std::vector<SeedPattern> instantiate_bins(const Netlist& netlist, const PatternRun& run,
                                          std::uint32_t seed_cycles, FillPolicy fill,
                                          std::uint64_t rng_seed, const ResetSpec& reset) {
  const std::uint32_t reset_cycles = reset.enabled() ? reset.cycles : 0;
  std::vector<SeedPattern> seeds;
  std::size_t index = 0;
  for (const MergedPattern& bin : run.bins) {
    if (bin.members0.empty() && bin.members1.empty()) continue;
    SeedPattern seed = instantiate_seed(netlist, bin, reset_cycles + seed_cycles, fill,
                                        rng_seed + index, reset);
    seed.origin = "bin" + std::to_string(index);
    seeds.push_back(std::move(seed));
    ++index;
  }
  return seeds;
}

namespace {

void fill_report_rows(const Netlist& netlist, const PatternRun& patterns,
                      PipelineRun& out) {
  std::unordered_map<NetId, double> cost;
  if (patterns.selected.has_costs())
    for (std::size_t i = 0; i < patterns.selected.members.size(); ++i)
      cost.emplace(patterns.selected.members[i], patterns.selected.costs[i]);
  std::unordered_set<NetId> in0(patterns.n0.begin(), patterns.n0.end());
  std::unordered_set<NetId> in1(patterns.n1.begin(), patterns.n1.end());
  std::unordered_set<NetId> untestable(patterns.untestable.begin(),
                                       patterns.untestable.end());

  std::unordered_map<std::string, NetId> by_name;
  for (NetId id : patterns.final_targets) by_name.emplace(netlist.net(id).name, id);
  for (TargetRow& row : out.report.targets) {
    const auto it = by_name.find(row.net);
    if (it == by_name.end()) continue;
    const NetId id = it->second;
    if (const auto c = cost.find(id); c != cost.end()) row.cost = c->second;
    if (in0.count(id))
      row.bin = "0";
    else if (in1.count(id))
      row.bin = "1";
    else if (untestable.count(id))
      row.bin = "untestable";
  }

  out.report.strategy = to_string(patterns.selected.strategy);
  out.report.bin_count = patterns.bins.size();
  out.report.n0 = patterns.n0.size();
  out.report.n1 = patterns.n1.size();
  out.report.n_conflict = patterns.conflicted.size();
  out.report.n_untestable = patterns.untestable.size();
}

void echo_config(const PipelineOptions& options, CampaignReport& report) {
  auto& echo = report.config_echo;
  echo["mode"] = to_string(options.campaign.mode);
  echo["strategy"] = to_string(options.selection.strategy);
  echo["goal"] = format_double(options.campaign.coverage_goal);
  echo["rng_seed"] = std::to_string(options.campaign.rng_seed);
  echo["workers"] = std::to_string(options.campaign.workers);
  echo["submodule"] = options.submodule ? "true" : "false";
  echo["multibin"] = options.multi_bin ? "true" : "false";
  echo["seed_cycles"] = std::to_string(options.seed_cycles);
  echo["entropy_cycles"] = std::to_string(options.selection.entropy_cycles);
  echo["fan_mode"] =
      options.selection.fan_mode == FanMode::Transitive ? "transitive" : "immediate";
  if (options.campaign.max_iterations)
    echo["max_iterations"] = std::to_string(*options.campaign.max_iterations);
  if (options.campaign.time_budget_ms)
    echo["time_budget_ms"] = std::to_string(*options.campaign.time_budget_ms);
  if (options.reset.enabled())
    echo["reset"] = options.reset.net + "," + (options.reset.active_high ? "1" : "0") + "," +
                    std::to_string(options.reset.cycles);
}

}  // namespace

PipelineRun run_pipeline(const Netlist& netlist, const PipelineOptions& options) {
  PipelineRun out;
  out.patterns = run_pattern_generation(netlist, options.selection, options.submodule,
                                        options.multi_bin, options.atpg);
  out.seeds = instantiate_bins(netlist, out.patterns, options.seed_cycles, options.fill,
                               options.campaign.rng_seed, options.reset);
  if (out.seeds.empty())
    throw ConfigError("no activation pattern produced a seed (all targets untestable?)");

  CampaignConfig campaign = options.campaign;
  campaign.mode = FuzzMode::Directed;
  campaign.reset = options.reset;
  out.campaign = run_campaign(netlist, out.patterns.final_targets, out.seeds, campaign);

  out.report = make_report(netlist, out.campaign);
  fill_report_rows(netlist, out.patterns, out);
  echo_config(options, out.report);
  return out;
}

PipelineRun run_baseline_pipeline(const Netlist& netlist, const PipelineOptions& options) {
  if (options.campaign.mode == FuzzMode::Directed)
    throw ConfigError("baseline pipeline needs random or cgf mode");
  PipelineRun out;
  out.patterns.selected = target_net_selection(netlist, options.selection);
  out.patterns.final_targets = out.patterns.selected.members;

  CampaignConfig campaign = options.campaign;
  campaign.reset = options.reset;
  out.campaign = run_baseline(netlist, out.patterns.final_targets, campaign);
  out.report = make_report(netlist, out.campaign);
  fill_report_rows(netlist, out.patterns, out);
  echo_config(options, out.report);
  return out;
}

}  // namespace netfuzz
