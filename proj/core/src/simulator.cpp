#include "netfuzz/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace netfuzz {

CoverageMap::CoverageMap(const Netlist& netlist, std::vector<NetId> monitored)
    : nets_(std::move(monitored)) {
  for (NetId net : nets_)
    if (net >= netlist.net_count()) throw ConfigError("monitored net out of range");
  slot_of_.reserve(nets_.size());
  for (std::size_t i = 0; i < nets_.size(); ++i) slot_of_.emplace(nets_[i], i);
  if (slot_of_.size() != nets_.size()) throw ConfigError("duplicate monitored net");
  seen0_.assign(nets_.size(), 0);
  seen1_.assign(nets_.size(), 0);
  hit0_.assign(nets_.size(), kNeverHit);
  hit1_.assign(nets_.size(), kNeverHit);
}

std::size_t CoverageMap::toggled_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < nets_.size(); ++i)
    if (seen0_[i] && seen1_[i]) ++n;
  return n;
}

double CoverageMap::percent() const {
  if (nets_.empty()) throw ConfigError("coverage percent over an empty monitor set");
  return 100.0 * static_cast<double>(toggled_count()) / static_cast<double>(nets_.size());
}

double CoverageMap::percent_of(std::span<const NetId> subset) const {
  if (subset.empty()) throw ConfigError("coverage percent over an empty monitor set");
  std::size_t n = 0;
  for (NetId net : subset)
    if (toggled(net)) ++n;
  return 100.0 * static_cast<double>(n) / static_cast<double>(subset.size());
}

void CoverageMap::merge(const CoverageMap& other) {
  for (std::size_t j = 0; j < other.nets_.size(); ++j) {
    auto it = slot_of_.find(other.nets_[j]);
    if (it == slot_of_.end()) continue;
    const std::size_t i = it->second;
    if (other.seen0_[j]) {
      seen0_[i] = 1;
      hit0_[i] = std::min(hit0_[i], other.hit0_[j]);
    }
    if (other.seen1_[j]) {
      seen1_[i] = 1;
      hit1_[i] = std::min(hit1_[i], other.hit1_[j]);
    }
  }
  cycles_ = std::max(cycles_, other.cycles_);
}

void CoverageMap::shift_cycles(std::uint64_t base) {
  for (std::size_t i = 0; i < nets_.size(); ++i) {
    if (seen0_[i]) hit0_[i] += base;
    if (seen1_[i]) hit1_[i] += base;
  }
  cycles_ += base;
}

std::uint64_t CoverageMap::cycles_to_goal(double goal_pct) const {
  if (nets_.empty()) return kNeverHit;
  std::vector<std::uint64_t> done;
  done.reserve(nets_.size());
  for (std::size_t i = 0; i < nets_.size(); ++i)
    if (seen0_[i] && seen1_[i]) done.push_back(std::max(hit0_[i], hit1_[i]));
  const auto needed = static_cast<std::size_t>(
      std::ceil(goal_pct / 100.0 * static_cast<double>(nets_.size())));
  if (needed == 0) return 0;
  if (done.size() < needed) return kNeverHit;
  std::nth_element(done.begin(), done.begin() + (needed - 1), done.end());
  return done[needed - 1];
}

double coverage_percent(const CoverageMap& map) { return map.percent(); }

Simulator::Simulator(const Netlist& netlist) : netlist_(netlist) {
  for (GateId g : topological_sort(netlist))
    if (netlist.gate(g).kind != GateKind::Dff) order_.push_back(g);
  values_.assign(netlist.net_count(), Tri::X);
  dff_state_.assign(netlist.dff_count(), Tri::X);
}

void Simulator::set_state_x() { std::fill(dff_state_.begin(), dff_state_.end(), Tri::X); }

void Simulator::set_state_zero() { std::fill(dff_state_.begin(), dff_state_.end(), Tri::F); }

void Simulator::set_reset(const ResetSpec& reset) {
  reset_ = reset;
  reset_net_ = kNoNet;
  if (!reset.enabled()) return;
  const NetId net = netlist_.net_by_name(reset.net);
  if (!netlist_.is_primary_input(net))
    throw ConfigError("reset signal '" + reset.net + "' is not a primary input");
  reset_net_ = net;
}

void Simulator::step(std::span<const std::uint8_t> pi_bits, CoverageMap* coverage) {
  const auto pis = netlist_.primary_inputs();
  if (pi_bits.size() != pis.size())
    throw ParseError("input vector width " + std::to_string(pi_bits.size()) +
                     " does not match " + std::to_string(pis.size()) + " primary inputs");

  for (std::size_t i = 0; i < pis.size(); ++i) values_[pis[i]] = tri_from_bit(pi_bits[i] != 0);
  const auto dffs = netlist_.dff_gates();
  for (std::size_t i = 0; i < dffs.size(); ++i)
    values_[netlist_.gate(dffs[i]).output] = dff_state_[i];

  for (GateId g : order_) {
    const Gate& gate = netlist_.gate(g);
    Tri v;
    switch (gate.kind) {
      case GateKind::Const0: v = Tri::F; break;
      case GateKind::Const1: v = Tri::T; break;
      case GateKind::Not: v = tri_not(values_[gate.inputs[0]]); break;
      case GateKind::Buf: v = values_[gate.inputs[0]]; break;
      default: {
        // Widest ISCAS-style gates stay small; evaluate inline.
        Tri acc;
        switch (gate.kind) {
          case GateKind::And:
          case GateKind::Nand: {
            acc = Tri::T;
            for (NetId in : gate.inputs) {
              const Tri x = values_[in];
              if (x == Tri::F) {
                acc = Tri::F;
                break;
              }
              if (x == Tri::X) acc = Tri::X;
            }
            if (gate.kind == GateKind::Nand) acc = tri_not(acc);
            break;
          }
          case GateKind::Or:
          case GateKind::Nor: {
            acc = Tri::F;
            for (NetId in : gate.inputs) {
              const Tri x = values_[in];
              if (x == Tri::T) {
                acc = Tri::T;
                break;
              }
              if (x == Tri::X) acc = Tri::X;
            }
            if (gate.kind == GateKind::Nor) acc = tri_not(acc);
            break;
          }
          default: {
            bool parity = false;
            acc = Tri::F;
            for (NetId in : gate.inputs) {
              const Tri x = values_[in];
              if (x == Tri::X) {
                acc = Tri::X;
                break;
              }
              parity ^= (x == Tri::T);
            }
            if (acc != Tri::X) {
              acc = tri_from_bit(parity);
              if (gate.kind == GateKind::Xnor) acc = tri_not(acc);
            }
            break;
          }
        }
        v = acc;
      }
    }
    values_[gate.output] = v;
  }

  const std::uint64_t cycle_now = coverage ? coverage->cycles_ + 1 : 0;
  if (coverage) {
    for (std::size_t i = 0; i < coverage->nets_.size(); ++i) {
      const Tri v = values_[coverage->nets_[i]];
      if (v == Tri::F && !coverage->seen0_[i]) {
        coverage->seen0_[i] = 1;
        coverage->hit0_[i] = cycle_now;
      } else if (v == Tri::T && !coverage->seen1_[i]) {
        coverage->seen1_[i] = 1;
        coverage->hit1_[i] = cycle_now;
      }
    }
    coverage->cycles_ = cycle_now;
  }

  const bool in_reset =
      reset_net_ != kNoNet && values_[reset_net_] == tri_from_bit(reset_.active_high);
  for (std::size_t i = 0; i < dffs.size(); ++i)
    dff_state_[i] = in_reset ? Tri::F : values_[netlist_.gate(dffs[i]).inputs[0]];

  if (trace_) {
    ++trace_cycle_;
    for (NetId id = 0; id < netlist_.net_count(); ++id)
      *trace_ << netlist_.net(id).name << ' ' << trace_cycle_ << ' ' << tri_char(values_[id])
              << '\n';
  }
}

SimStats Simulator::simulate_seed(const SeedVectors& seed, CoverageMap* coverage) {
  if (seed.empty()) throw ParseError("empty seed");
  set_state_x();
  const std::size_t before = coverage ? coverage->toggled_count() : 0;
  SimStats stats;
  for (const InputVector& vec : seed) {
    step(vec, coverage);
    ++stats.cycles;
  }
  if (coverage) stats.monitored_toggles = coverage->toggled_count() - before;
  return stats;
}

std::vector<Tri> eval_combinational(const Netlist& netlist,
                                    std::span<const std::pair<NetId, bool>> forced) {
  std::vector<Tri> values(netlist.net_count(), Tri::X);
  for (const auto& [net, bit] : forced) {
    if (!netlist.is_controllable(net))
      throw ParseError("net '" + netlist.net(net).name + "' is not directly controllable");
    values[net] = tri_from_bit(bit);
  }
  for (GateId g : topological_sort(netlist)) {
    const Gate& gate = netlist.gate(g);
    if (gate.kind == GateKind::Dff) continue;  // outputs stay as forced or X
    std::vector<Tri> ins(gate.inputs.size());
    for (std::size_t i = 0; i < ins.size(); ++i) ins[i] = values[gate.inputs[i]];
    values[gate.output] = eval_gate3v(gate.kind, ins);
  }
  return values;
}

}  // namespace netfuzz
