#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netfuzz/types.hpp"

namespace netfuzz {

struct Sink {
  GateId gate;
  std::uint32_t pin;

  friend bool operator==(const Sink&, const Sink&) = default;
};

struct Gate {
  GateKind kind;
  std::vector<NetId> inputs;  // ordered
  NetId output = kNoNet;
};

struct Net {
  std::string name;           // hierarchical, unique
  GateId driver = kNoGate;    // kNoGate => primary input
  std::vector<Sink> sinks;
};

/// Immutable gate-level netlist. Construct through NetlistBuilder (parsers and
/// generators), then share freely across threads.
class Netlist {
public:
  const std::string& name() const { return name_; }

  std::size_t net_count() const { return nets_.size(); }
  std::size_t gate_count() const { return gates_.size(); }

  const Net& net(NetId id) const { return nets_[id]; }
  const Gate& gate(GateId id) const { return gates_[id]; }

  std::span<const NetId> primary_inputs() const { return primary_inputs_; }
  std::span<const NetId> primary_outputs() const { return primary_outputs_; }

  std::optional<NetId> find_net(std::string_view name) const;

  /// Net id or ParseError naming the missing net.
  NetId net_by_name(std::string_view name) const;

  bool is_primary_input(NetId id) const { return pi_flags_[id] != 0; }

  bool is_dff_output(NetId id) const {
    const GateId g = nets_[id].driver;
    return g != kNoGate && gates_[g].kind == GateKind::Dff;
  }

  bool is_const_driven(NetId id) const {
    const GateId g = nets_[id].driver;
    return g != kNoGate && is_const(gates_[g].kind);
  }

  /// PIs and flip-flop outputs: the nets an input pattern can set directly
  /// (flip-flops under the scan assumption).
  bool is_controllable(NetId id) const {
    return is_primary_input(id) || is_dff_output(id);
  }

  std::size_t dff_count() const { return dff_gates_.size(); }
  std::span<const GateId> dff_gates() const { return dff_gates_; }

private:
  friend class NetlistBuilder;

  std::string name_;
  std::vector<Net> nets_;
  std::vector<Gate> gates_;
  std::vector<NetId> primary_inputs_;
  std::vector<NetId> primary_outputs_;
  std::vector<GateId> dff_gates_;
  std::vector<std::uint8_t> pi_flags_;
  std::unordered_map<std::string, NetId> index_;
};

/// Accumulates nets and gates, then validates every structural invariant in
/// finish(): unique names, single drivers, no undriven non-PI nets, legal
/// arities, combinational acyclicity.
class NetlistBuilder {
public:
  explicit NetlistBuilder(std::string name);

  /// Returns the existing id when the name is already known.
  NetId add_net(std::string_view name, int source_line = 0);

  void mark_input(NetId id, int source_line = 0);
  void mark_output(NetId id);

  GateId add_gate(GateKind kind, NetId output, std::vector<NetId> inputs,
                  int source_line = 0);

  bool has_net(std::string_view name) const;
  NetId net_id(std::string_view name) const;
  std::size_t net_count() const { return netlist_.nets_.size(); }

  /// Validates and freezes. The builder is empty afterwards.
  Netlist finish();

private:
  Netlist netlist_;
  std::vector<int> net_line_;   // first reference, for error messages
  std::vector<int> drive_line_;
};

/// Gate order where every combinational gate follows the drivers of all its
/// inputs. Flip-flops and constants act as sources (sequential edges are cut).
/// Deterministic: ties resolve to the lowest gate id.
/// Throws ParseError naming a member gate if a combinational cycle exists.
std::vector<GateId> topological_sort(const Netlist& netlist);

/// Transitive fan-in of `net`, walking drivers until primary inputs or
/// flip-flop outputs. Boundary nets are included; boundary DFF gates are not.
/// `nets` and `gates` are sorted ascending.
struct Cone {
  std::vector<NetId> nets;
  std::vector<GateId> gates;
};

Cone fanin_cone(const Netlist& netlist, NetId net);

enum class FanMode {
  Transitive,  // cone sizes, bounded at sequential boundaries
  Immediate,   // driver arity / sink count
};

struct FanMetrics {
  std::uint32_t fi = 0;
  std::uint32_t fo = 0;
};

/// Transitive mode counts nets in the fan-in/fan-out cone excluding the net
/// itself; both directions stop at flip-flop boundaries.
FanMetrics fan_metrics(const Netlist& netlist, NetId net,
                       FanMode mode = FanMode::Transitive);

/// fan_metrics for every net id at once.
std::vector<FanMetrics> fan_metrics_all(const Netlist& netlist, FanMode mode);

/// Distance from each net to the nearest controllable source (PI, flip-flop
/// output, constant); the ATPG backtrace cost estimate.
std::vector<std::uint32_t> net_depths(const Netlist& netlist);

}  // namespace netfuzz
