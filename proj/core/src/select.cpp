#include "netfuzz/select.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "netfuzz/entropy.hpp"
#include "netfuzz/rng.hpp"

namespace netfuzz {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Manual: return "manual";
    case Strategy::Random: return "random";
    case Strategy::CostThreshold: return "cost_threshold";
    case Strategy::CostPercentile: return "cost_percentile";
  }
  return "?";
}

CostWeights CostWeights::normalized(double fi, double fo, double h) {
  if (fi < 0 || fo < 0 || h < 0) throw ConfigError("cost weights must be nonnegative");
  const double sum = fi + fo + h;
  if (sum <= 0) throw ConfigError("cost weights must not all be zero");
  return CostWeights{fi / sum, fo / sum, h / sum};
}

double cost_function(double fi, double fo, double h, double fi_max, double fo_max,
                     const CostWeights& weights) {
  fi_max = std::max(fi_max, 1.0);
  fo_max = std::max(fo_max, 1.0);
  return weights.fi * (fi / fi_max) + weights.fo * (fo / fo_max) + weights.h * h;
}

CostTable compute_cost_table(const Netlist& netlist, const SelectionConfig& config) {
  CostTable table;
  table.fan = fan_metrics_all(netlist, config.fan_mode);
  table.entropy = estimate_entropy(netlist, config.entropy_cycles, config.rng_seed);
  table.cost.assign(netlist.net_count(), 0.0);

  for (NetId id = 0; id < netlist.net_count(); ++id)
    if (!netlist.is_const_driven(id)) table.eligible.push_back(id);

  double fi_max = 0.0, fo_max = 0.0;
  for (NetId id : table.eligible) {
    fi_max = std::max(fi_max, static_cast<double>(table.fan[id].fi));
    fo_max = std::max(fo_max, static_cast<double>(table.fan[id].fo));
  }
  table.fi_max = std::max(fi_max, 1.0);
  table.fo_max = std::max(fo_max, 1.0);

  for (NetId id : table.eligible)
    table.cost[id] = cost_function(table.fan[id].fi, table.fan[id].fo, table.entropy[id],
                                   table.fi_max, table.fo_max, config.weights);
  return table;
}

namespace {

TargetSet ranked_selection(const Netlist& netlist, const SelectionConfig& config) {
  const CostTable table = compute_cost_table(netlist, config);

  std::vector<NetId> ranked = table.eligible;
  std::sort(ranked.begin(), ranked.end(), [&](NetId a, NetId b) {
    if (table.cost[a] != table.cost[b]) return table.cost[a] > table.cost[b];
    return netlist.net(a).name < netlist.net(b).name;
  });

  TargetSet out;
  out.strategy = config.strategy;
  if (config.strategy == Strategy::CostThreshold) {
    if (config.threshold < 0.0 || config.threshold > 1.0)
      throw ConfigError("cost threshold must be in [0,1]");
    for (NetId id : ranked) {
      if (table.cost[id] < config.threshold) break;
      out.members.push_back(id);
    }
  } else {
    if (config.percentile <= 0.0 || config.percentile > 100.0)
      throw ConfigError("percentile must be in (0,100]");
    const auto count = static_cast<std::size_t>(std::ceil(
        config.percentile / 100.0 * static_cast<double>(ranked.size())));
    out.members.assign(ranked.begin(), ranked.begin() + std::min(count, ranked.size()));
  }
  if (out.members.empty())
    throw ConfigError("target selection produced an empty set (strategy " +
                      std::string(to_string(config.strategy)) + ")");
  out.costs.reserve(out.members.size());
  for (NetId id : out.members) out.costs.push_back(table.cost[id]);
  return out;
}

}  // namespace

TargetSet target_net_selection(const Netlist& netlist, const SelectionConfig& config) {
  TargetSet out;
  out.strategy = config.strategy;

  switch (config.strategy) {
    case Strategy::Manual: {
      if (config.manual_names.empty()) throw ConfigError("manual strategy with no net names");
      std::vector<std::uint8_t> taken(netlist.net_count(), 0);
      for (const std::string& name : config.manual_names) {
        const auto id = netlist.find_net(name);
        if (!id) throw ConfigError("manual target list names unknown net '" + name + "'");
        if (netlist.is_const_driven(*id))
          throw ConfigError("manual target '" + name + "' is constant-driven");
        if (taken[*id]) continue;  // dedup, keep first occurrence
        taken[*id] = 1;
        out.members.push_back(*id);
      }
      return out;
    }
    case Strategy::Random: {
      std::vector<NetId> eligible;
      for (NetId id = 0; id < netlist.net_count(); ++id)
        if (!netlist.is_const_driven(id)) eligible.push_back(id);
      if (config.random_k == 0) throw ConfigError("random strategy needs k >= 1");
      if (config.random_k > eligible.size())
        throw ConfigError("random strategy asks for " + std::to_string(config.random_k) +
                          " nets but only " + std::to_string(eligible.size()) +
                          " are selectable");
      std::mt19937_64 rng(config.rng_seed);
      // Partial Fisher-Yates over the id-ordered pool.
      for (std::uint32_t i = 0; i < config.random_k; ++i) {
        const std::size_t j = i + rng_below(rng, eligible.size() - i);
        std::swap(eligible[i], eligible[j]);
        out.members.push_back(eligible[i]);
      }
      return out;
    }
    case Strategy::CostThreshold:
    case Strategy::CostPercentile:
      return ranked_selection(netlist, config);
  }
  throw ConfigError("unknown selection strategy");
}

std::vector<std::string> load_target_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open target list '" + path + "'");
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const std::size_t b = line.find_last_not_of(" \t\r");
    names.push_back(line.substr(a, b - a + 1));
  }
  return names;
}

}  // namespace netfuzz
