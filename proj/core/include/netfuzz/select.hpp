#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netfuzz/netlist.hpp"

namespace netfuzz {

enum class Strategy : std::uint8_t { Manual, Random, CostThreshold, CostPercentile };

const char* to_string(Strategy s);

struct CostWeights {
  double fi = 1.0 / 3.0;
  double fo = 1.0 / 3.0;
  double h = 1.0 / 3.0;

  /// Rejects negative weights, rescales to sum 1.
  static CostWeights normalized(double fi, double fo, double h);
};

struct SelectionConfig {
  Strategy strategy = Strategy::CostPercentile;
  std::vector<std::string> manual_names;  // Manual
  std::uint32_t random_k = 0;             // Random
  double threshold = 0.3;                 // CostThreshold, in [0,1]
  double percentile = 10.0;               // CostPercentile, in (0,100]
  CostWeights weights;
  std::uint64_t entropy_cycles = 4096;
  std::uint64_t rng_seed = 1;
  FanMode fan_mode = FanMode::Transitive;
};

/// Selected coverage points. `costs` parallels `members` for the cost
/// strategies and is empty for manual/random selection.
struct TargetSet {
  std::vector<NetId> members;
  std::vector<double> costs;
  Strategy strategy = Strategy::Manual;

  bool has_costs() const { return !costs.empty(); }
};

/// Normalized weighted sum: w_fi*FI/FI_max + w_fo*FO/FO_max + w_h*H.
/// Maxima below 1 are clamped to 1. Result is in [0,1] and monotone
/// nondecreasing in each argument.
double cost_function(double fi, double fo, double h, double fi_max, double fo_max,
                     const CostWeights& weights);

/// Everything cost-shaped the selector computed, for reports and independent
/// recomputation.
struct CostTable {
  std::vector<NetId> eligible;          // non-constant-driven nets
  std::vector<double> cost;             // indexed by NetId (0 for ineligible)
  std::vector<FanMetrics> fan;          // indexed by NetId
  std::vector<double> entropy;          // indexed by NetId
  double fi_max = 1.0, fo_max = 1.0;    // over eligible nets, clamped to >= 1
};

CostTable compute_cost_table(const Netlist& netlist, const SelectionConfig& config);

/// Target selection over the configured strategy. Constant-driven nets are
/// never selected; manual lists naming unknown or constant nets and empty
/// results are errors. Cost-ranked results are ordered by descending cost,
/// ties by net name.
TargetSet target_net_selection(const Netlist& netlist, const SelectionConfig& config);

/// Manual target list file: one hierarchical net name per line, '#' comments.
std::vector<std::string> load_target_list(const std::string& path);

}  // namespace netfuzz
