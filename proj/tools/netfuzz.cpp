// netfuzz: directed graybox fuzzing for gate-level netlists.
//
// Subcommands: stats, select, atpg, fuzz, extract-sub, emit-monitor, report.
// Exit codes: 0 success / goal reached, 1 usage or configuration error,
// 2 campaign finished without reaching the coverage goal, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netfuzz/atpg.hpp"
#include "netfuzz/bench.hpp"
#include "netfuzz/pipeline.hpp"
#include "netfuzz/report.hpp"
#include "netfuzz/seed_io.hpp"
#include "netfuzz/verilog.hpp"

namespace {

using namespace netfuzz;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGoalNotReached = 2;
constexpr int kExitInternal = 3;

struct NetlistArgs {
  std::string path;
  std::string format = "bench";
  std::string cellmap;
};

void add_netlist_flags(CLI::App* cmd, NetlistArgs& args) {
  cmd->add_option("--netlist", args.path, "netlist file");
  cmd->add_option("--format", args.format, "bench|sverilog")
      ->check(CLI::IsMember({"bench", "sverilog"}));
  cmd->add_option("--cellmap", args.cellmap, "cell map for sverilog input");
}

Netlist load_netlist(const NetlistArgs& args) {
  if (args.path.empty()) throw ConfigError("--netlist is required");
  if (args.format == "bench") return parse_bench_file(args.path);
  if (args.cellmap.empty())
    throw ConfigError("sverilog input needs --cellmap");
  return parse_structural_verilog_file(args.path, load_cell_map(args.cellmap));
}

struct SelectionArgs {
  std::string strategy = "pct:10";
  std::string weights = "1,1,1";
  std::uint64_t entropy_cycles = 4096;
  std::string fan_mode = "transitive";
  std::uint64_t seed = 1;
};

void add_selection_flags(CLI::App* cmd, SelectionArgs& args) {
  cmd->add_option("--strategy", args.strategy,
                  "manual:<file> | random:<k> | cost:<tau> | pct:<p>");
  cmd->add_option("--weights", args.weights, "cost weights fi,fo,h (renormalized)");
  cmd->add_option("--entropy-cycles", args.entropy_cycles, "cycles for entropy estimation");
  cmd->add_option("--fan-mode", args.fan_mode, "transitive|immediate")
      ->check(CLI::IsMember({"transitive", "immediate"}));
  cmd->add_option("--seed", args.seed, "rng seed");
}

SelectionConfig make_selection(const SelectionArgs& args) {
  SelectionConfig cfg;
  cfg.entropy_cycles = args.entropy_cycles;
  cfg.rng_seed = args.seed;
  cfg.fan_mode = args.fan_mode == "immediate" ? FanMode::Immediate : FanMode::Transitive;

  double wfi = 1, wfo = 1, wh = 1;
  if (std::sscanf(args.weights.c_str(), "%lf,%lf,%lf", &wfi, &wfo, &wh) != 3)
    throw ConfigError("--weights expects fi,fo,h");
  cfg.weights = CostWeights::normalized(wfi, wfo, wh);

  const std::size_t colon = args.strategy.find(':');
  if (colon == std::string::npos)
    throw ConfigError("--strategy expects kind:value, got '" + args.strategy + "'");
  const std::string kind = args.strategy.substr(0, colon);
  const std::string value = args.strategy.substr(colon + 1);
  if (kind == "manual") {
    cfg.strategy = Strategy::Manual;
    cfg.manual_names = load_target_list(value);
  } else if (kind == "random") {
    cfg.strategy = Strategy::Random;
    cfg.random_k = static_cast<std::uint32_t>(std::stoul(value));
  } else if (kind == "cost") {
    cfg.strategy = Strategy::CostThreshold;
    cfg.threshold = std::stod(value);
  } else if (kind == "pct") {
    cfg.strategy = Strategy::CostPercentile;
    cfg.percentile = std::stod(value);
  } else {
    throw ConfigError("unknown strategy '" + kind + "'");
  }
  return cfg;
}

ResetSpec parse_reset(const std::string& text) {
  ResetSpec reset;
  if (text.empty()) return reset;
  char name[256] = {0};
  int pol = 1;
  unsigned cycles = 1;
  if (std::sscanf(text.c_str(), "%255[^,],%d,%u", name, &pol, &cycles) != 3)
    throw ConfigError("--reset expects name,polarity,cycles");
  reset.net = name;
  reset.active_high = pol != 0;
  reset.cycles = cycles;
  return reset;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

// ------------------------------------------------------------- subcommands

int cmd_stats(const NetlistArgs& nargs) {
  const Netlist nl = load_netlist(nargs);
  std::map<std::string, std::size_t> kind_counts;
  for (GateId g = 0; g < nl.gate_count(); ++g) ++kind_counts[to_string(nl.gate(g).kind)];
  std::cout << "design  : " << nl.name() << "\n"
            << "inputs  : " << nl.primary_inputs().size() << "\n"
            << "outputs : " << nl.primary_outputs().size() << "\n"
            << "gates   : " << nl.gate_count() << "\n"
            << "nets    : " << nl.net_count() << "\n"
            << "dffs    : " << nl.dff_count() << "\n";
  for (const auto& [kind, count] : kind_counts)
    std::cout << "  " << kind << " : " << count << "\n";
  return kExitOk;
}

int cmd_select(const NetlistArgs& nargs, const SelectionArgs& sargs,
               const std::string& out_path) {
  const Netlist nl = load_netlist(nargs);
  const SelectionConfig cfg = make_selection(sargs);
  const TargetSet targets = target_net_selection(nl, cfg);

  std::ostringstream out;
  out << "# strategy=" << to_string(targets.strategy) << " targets="
      << targets.members.size() << "\n";
  for (std::size_t i = 0; i < targets.members.size(); ++i) {
    out << nl.net(targets.members[i]).name;
    if (targets.has_costs()) out << "  # C=" << format_double(targets.costs[i]);
    out << "\n";
  }
  if (out_path.empty())
    std::cout << out.str();
  else
    write_text_file(out_path, out.str());
  return kExitOk;
}

int cmd_atpg(const NetlistArgs& nargs, const SelectionArgs& sargs, bool multibin,
             std::uint64_t budget, const std::string& out_dir) {
  const Netlist nl = load_netlist(nargs);
  const SelectionConfig cfg = make_selection(sargs);
  AtpgLimits limits;
  limits.max_backtracks = budget;
  const PatternRun run = run_pattern_generation(nl, cfg, false, multibin, limits);

  std::filesystem::create_directories(out_dir);
  write_text_file(std::filesystem::path(out_dir) / "cubes.txt",
                  write_cube_dump(nl, *run.raw));

  std::cout << "targets    : " << run.selected.members.size() << "\n"
            << "N0         : " << run.n0.size() << "\n"
            << "N1         : " << run.n1.size() << "\n"
            << "N_C        : " << run.conflicted.size() << "\n"
            << "untestable : " << run.untestable.size() << "\n"
            << "bins       : " << run.bins.size() << "\n";
  for (std::size_t i = 0; i < run.bins.size(); ++i)
    std::cout << "  bin" << i << ": cube_bits=" << run.bins[i].cube.size()
              << " n0=" << run.bins[i].members0.size()
              << " n1=" << run.bins[i].members1.size() << "\n";
  std::cout << "cube dump  : " << (std::filesystem::path(out_dir) / "cubes.txt").string()
            << "\n";
  return kExitOk;
}

struct FuzzArgs {
  bool submodule = false;
  bool multibin = false;
  double goal = 90.0;
  std::optional<std::uint64_t> time_s;
  std::optional<std::uint64_t> iters;
  std::uint32_t workers = 1;
  std::string reset;
  std::string mode = "directed";
  std::uint32_t seed_cycles = 8;
  bool cycle_stages = false;
  std::uint32_t baseline_seeds = 8;
  std::string out_dir = "netfuzz_out";
};

int cmd_fuzz(const NetlistArgs& nargs, const SelectionArgs& sargs, const FuzzArgs& fargs) {
  const Netlist nl = load_netlist(nargs);

  PipelineOptions opt;
  opt.selection = make_selection(sargs);
  opt.submodule = fargs.submodule;
  opt.multi_bin = fargs.multibin;
  opt.reset = parse_reset(fargs.reset);
  opt.seed_cycles = fargs.seed_cycles;
  opt.campaign.coverage_goal = fargs.goal;
  opt.campaign.workers = fargs.workers;
  opt.campaign.rng_seed = sargs.seed;
  opt.campaign.seed_cycles = fargs.seed_cycles;
  opt.campaign.mutation.cycle_stages = fargs.cycle_stages;
  opt.campaign.baseline_seed_count = fargs.baseline_seeds;
  if (fargs.time_s) opt.campaign.time_budget_ms = *fargs.time_s * 1000;
  if (fargs.iters) opt.campaign.max_iterations = *fargs.iters;
  if (!fargs.time_s && !fargs.iters) opt.campaign.max_iterations = 100000;

  const auto mode = fuzz_mode_from(fargs.mode);
  if (!mode) throw ConfigError("unknown mode '" + fargs.mode + "'");
  opt.campaign.mode = *mode;

  const PipelineRun run = *mode == FuzzMode::Directed ? run_pipeline(nl, opt)
                                                      : run_baseline_pipeline(nl, opt);

  const std::filesystem::path out_dir(fargs.out_dir);
  write_report(run.report, out_dir);
  save_corpus(CorpusPaths{out_dir / "corpus"}, run.campaign.pool, run.campaign.archive);
  std::cout << render_summary(run.report);
  std::cout << "report     : " << (out_dir / "campaign.json").string() << "\n";

  return run.campaign.goal_reached() ? kExitOk : kExitGoalNotReached;
}

int cmd_extract_sub(const NetlistArgs& nargs, const SelectionArgs& sargs,
                    const std::string& out_dir) {
  const Netlist nl = load_netlist(nargs);
  const SelectionConfig cfg = make_selection(sargs);
  const TargetSet targets = target_net_selection(nl, cfg);
  const SubNetlist sub = extract_submodule(nl, targets.members);

  std::filesystem::create_directories(out_dir);
  write_bench_file(sub.netlist, (std::filesystem::path(out_dir) / "sub.bench").string());
  write_text_file(std::filesystem::path(out_dir) / "boundary.map",
                  write_boundary_map(nl, sub));
  std::cout << "sub_target_signals  : " << sub.sub_target_count() << "\n"
            << "main_target_signals : " << sub.main_boundary_count() << "\n"
            << "sub gates           : " << sub.netlist.gate_count() << "\n";
  return kExitOk;
}

int cmd_emit_monitor(const NetlistArgs& nargs, const SelectionArgs& sargs,
                     const std::string& module_name, const std::string& out_path) {
  const Netlist nl = load_netlist(nargs);
  const SelectionConfig cfg = make_selection(sargs);
  const TargetSet targets = target_net_selection(nl, cfg);
  const std::string text = emit_monitor(nl, targets, module_name);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return kExitOk;
}

int cmd_report(const std::string& campaign_path, const std::string& out_dir) {
  if (campaign_path.empty()) throw ConfigError("--campaign is required");
  const CampaignReport report = load_campaign_json(campaign_path);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_text_file(std::filesystem::path(out_dir) / "coverage_timeline.csv",
                    render_timeline_csv(report));
    write_text_file(std::filesystem::path(out_dir) / "targets.csv",
                    render_targets_csv(report));
  }
  std::cout << render_summary(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed graybox fuzzing for gate-level netlists"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file ([subcommand] sections)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  NetlistArgs nargs;
  SelectionArgs sargs;
  FuzzArgs fargs;
  std::string out_path;
  std::string module_name = "netfuzz_monitor";
  std::uint64_t budget = 10000;
  bool multibin = false;
  std::string campaign_path;

  CLI::App* stats = app.add_subcommand("stats", "netlist summary")->configurable();
  add_netlist_flags(stats, nargs);

  CLI::App* select = app.add_subcommand("select", "target net selection dump")->configurable();
  add_netlist_flags(select, nargs);
  add_selection_flags(select, sargs);
  select->add_option("--out", out_path, "write the target list here");

  CLI::App* atpg = app.add_subcommand("atpg", "activation cubes and merge summary")->configurable();
  add_netlist_flags(atpg, nargs);
  add_selection_flags(atpg, sargs);
  atpg->add_flag("--multibin", multibin, "overflow bins for conflicted nets");
  atpg->add_option("--budget", budget, "backtrack budget per objective");
  atpg->add_option("--out", fargs.out_dir, "output directory")->capture_default_str();

  CLI::App* fuzz = app.add_subcommand("fuzz", "full directed fuzzing pipeline")->configurable();
  add_netlist_flags(fuzz, nargs);
  add_selection_flags(fuzz, sargs);
  fuzz->add_flag("--submodule", fargs.submodule, "extract a target submodule first");
  fuzz->add_flag("--multibin", fargs.multibin, "overflow bins for conflicted nets");
  fuzz->add_option("--goal", fargs.goal, "coverage goal percent")->capture_default_str();
  fuzz->add_option("--time", fargs.time_s, "time budget, seconds");
  fuzz->add_option("--iters", fargs.iters, "iteration bound");
  fuzz->add_option("--workers", fargs.workers, "parallel workers")->capture_default_str();
  fuzz->add_option("--reset", fargs.reset, "reset spec: name,polarity,cycles");
  fuzz->add_option("--mode", fargs.mode, "directed|random|cgf")->capture_default_str();
  fuzz->add_option("--seed-cycles", fargs.seed_cycles, "post-reset cycles per seed")
      ->capture_default_str();
  fuzz->add_flag("--cycle-stages", fargs.cycle_stages, "enable cycle dup/drop/splice");
  fuzz->add_option("--baseline-seeds", fargs.baseline_seeds,
                   "initial pool size for baselines")
      ->capture_default_str();
  fuzz->add_option("--out", fargs.out_dir, "output directory")->capture_default_str();

  CLI::App* extract = app.add_subcommand("extract-sub", "emit the target submodule")->configurable();
  add_netlist_flags(extract, nargs);
  add_selection_flags(extract, sargs);
  extract->add_option("--out", fargs.out_dir, "output directory")->capture_default_str();

  CLI::App* monitor = app.add_subcommand("emit-monitor", "emit the monitor binding shell")->configurable();
  add_netlist_flags(monitor, nargs);
  add_selection_flags(monitor, sargs);
  monitor->add_option("--module-name", module_name, "emitted module name")
      ->capture_default_str();
  monitor->add_option("--out", out_path, "write the module here (default stdout)");

  CLI::App* report = app.add_subcommand("report", "re-render reports from campaign.json")->configurable();
  report->add_option("--campaign", campaign_path, "campaign.json path");
  report->add_option("--out", out_path, "directory for re-rendered CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(nargs);
    if (select->parsed()) return cmd_select(nargs, sargs, out_path);
    if (atpg->parsed()) return cmd_atpg(nargs, sargs, multibin, budget, fargs.out_dir);
    if (fuzz->parsed()) return cmd_fuzz(nargs, sargs, fargs);
    if (extract->parsed()) return cmd_extract_sub(nargs, sargs, fargs.out_dir);
    if (monitor->parsed()) return cmd_emit_monitor(nargs, sargs, module_name, out_path);
    if (report->parsed()) return cmd_report(campaign_path, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
