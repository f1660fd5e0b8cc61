#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "netfuzz/logic.hpp"
#include "netfuzz/netlist.hpp"
#include "netfuzz/seed.hpp"

namespace netfuzz {

/// Global synchronous reset: while the named PI holds the active value, every
/// flip-flop latches 0 instead of its data input.
struct ResetSpec {
  std::string net;  // empty => no reset
  bool active_high = true;
  std::uint32_t cycles = 0;  // prologue length used by seed instantiation

  bool enabled() const { return !net.empty(); }
};

inline constexpr std::uint64_t kNeverHit = std::numeric_limits<std::uint64_t>::max();

/// Sticky per-target toggle flags. Cycle numbers are campaign-global (the map
/// carries the running cycle counter), flags only ever turn on, and merging
/// two maps is flag-OR / first-hit-min.
class CoverageMap {
public:
  CoverageMap() = default;
  CoverageMap(const Netlist& netlist, std::vector<NetId> monitored);

  std::span<const NetId> monitored() const { return nets_; }
  bool watches(NetId net) const { return slot_of_.count(net) > 0; }

  bool seen0(NetId net) const { return seen0_[slot(net)] != 0; }
  bool seen1(NetId net) const { return seen1_[slot(net)] != 0; }
  bool toggled(NetId net) const { return seen0(net) && seen1(net); }
  std::uint64_t first_hit0(NetId net) const { return hit0_[slot(net)]; }
  std::uint64_t first_hit1(NetId net) const { return hit1_[slot(net)]; }

  std::size_t toggled_count() const;

  /// 100 * fully-toggled / monitored. Throws ConfigError when nothing is
  /// monitored.
  double percent() const;

  /// Same metric restricted to `subset` (used by the CGF baseline, which
  /// monitors everything but reports over the target set).
  double percent_of(std::span<const NetId> subset) const;

  /// Commutative, idempotent: flags OR together, first-hit cycles take the
  /// minimum, cycle counters take the maximum.
  void merge(const CoverageMap& other);

  /// Rebases locally-counted first-hit cycles onto a campaign-global counter.
  void shift_cycles(std::uint64_t base);

  /// Cumulative cycles simulated into this map.
  std::uint64_t cycles() const { return cycles_; }

  /// Smallest global cycle by which `goal_pct` of the monitored set was fully
  /// toggled, reconstructed from first-hit cycles; kNeverHit if never.
  std::uint64_t cycles_to_goal(double goal_pct) const;

private:
  friend class Simulator;

  std::size_t slot(NetId net) const { return slot_of_.at(net); }

  std::vector<NetId> nets_;
  std::unordered_map<NetId, std::size_t> slot_of_;
  std::vector<std::uint8_t> seen0_, seen1_;
  std::vector<std::uint64_t> hit0_, hit1_;
  std::uint64_t cycles_ = 0;
};

double coverage_percent(const CoverageMap& map);

struct SimStats {
  std::uint64_t cycles = 0;
  std::uint64_t monitored_toggles = 0;  // completed 0/1 pairs during this run
};

/// Cycle-based levelized 3-valued simulator. One instance owns its state and
/// is single-threaded; many instances may share one immutable Netlist.
class Simulator {
public:
  explicit Simulator(const Netlist& netlist);

  /// Flip-flop initialization: unknown by default.
  void set_state_x();
  void set_state_zero();

  void set_reset(const ResetSpec& reset);

  /// Evaluates one clock cycle: PIs from `pi_bits` (declaration order),
  /// combinational logic in topological order, coverage observation, then
  /// flip-flops latch. Throws ParseError on width mismatch.
  void step(std::span<const std::uint8_t> pi_bits, CoverageMap* coverage = nullptr);

  Tri value(NetId net) const { return values_[net]; }
  std::span<const Tri> values() const { return values_; }

  /// Runs a whole seed from the all-X (or post-reset) state. DFF state is
  /// reinitialized per seed; coverage and its cycle counter accumulate.
  SimStats simulate_seed(const SeedVectors& seed, CoverageMap* coverage);

  /// Debug trace: one `net_name cycle value` line per net per cycle, written
  /// after each step. Pass nullptr to disable.
  void set_trace(std::ostream* sink) { trace_ = sink; }

  const Netlist& netlist() const { return netlist_; }

private:
  const Netlist& netlist_;
  std::vector<GateId> order_;       // combinational gates only, topo order
  std::vector<Tri> values_;
  std::vector<Tri> dff_state_;      // indexed like netlist.dff_gates()
  ResetSpec reset_;
  NetId reset_net_ = kNoNet;
  std::ostream* trace_ = nullptr;
  std::uint64_t trace_cycle_ = 0;
};

/// One combinational evaluation with selected PI / flip-flop-output nets
/// forced and everything else X: the ATPG and merge validation primitive.
/// `forced` pairs must reference controllable nets.
std::vector<Tri> eval_combinational(
    const Netlist& netlist, std::span<const std::pair<NetId, bool>> forced);

}  // namespace netfuzz
