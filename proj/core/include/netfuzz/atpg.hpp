#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netfuzz/cube.hpp"
#include "netfuzz/netlist.hpp"

namespace netfuzz {

/// Drive `net` to `value` — the activation half of a stuck-at test for the
/// opposite polarity.
struct Objective {
  NetId net;
  bool value;
};

enum class AtpgOutcome : std::uint8_t {
  Satisfied,      // cube forces the objective under 3-valued simulation
  Unjustifiable,  // decision tree exhausted: net is structurally stuck
  Aborted,        // backtrack budget exhausted
};

struct AtpgResult {
  AtpgOutcome outcome = AtpgOutcome::Unjustifiable;
  Cube cube;  // meaningful for Satisfied only
  std::uint64_t backtracks = 0;
};

struct AtpgLimits {
  std::uint64_t max_backtracks = 10000;
};

/// PODEM-style line justification: decisions are made on PIs and flip-flop
/// outputs (scan assumption) only, implications run by 3-valued simulation of
/// the objective's fan-in cone, conflicts backtrack. A Satisfied cube contains
/// exactly the decided inputs, leaving everything else don't-care.
/// Throws ParseError for unknown or constant-driven objective nets.
AtpgResult justify(const Netlist& netlist, Objective objective, AtpgLimits limits = {});

/// Stable per-net identifier: hierarchical name plus the topological index of
/// the driving gate (-1 for primary inputs).
struct HierId {
  std::string name;
  std::int64_t topo_index = -1;
};

std::vector<std::pair<NetId, HierId>> get_id(const Netlist& netlist,
                                             std::span<const GateId> topo_order,
                                             std::span<const NetId> targets);

/// Raw per-net, per-polarity activation cubes for a target list.
struct ActivationPatterns {
  struct Entry {
    NetId net;
    std::optional<Cube> cube0, cube1;
    AtpgOutcome outcome0 = AtpgOutcome::Unjustifiable;
    AtpgOutcome outcome1 = AtpgOutcome::Unjustifiable;
  };
  std::vector<Entry> entries;       // target order preserved
  std::vector<NetId> untestable;    // no Satisfied cube for either polarity
};

ActivationPatterns gen_activation_patterns(const Netlist& netlist,
                                           std::span<const NetId> targets,
                                           AtpgLimits limits = {});

/// Debug dump, one line per (net, polarity): `net_name polarity pi=val ...`.
std::string write_cube_dump(const Netlist& netlist, const ActivationPatterns& patterns);

}  // namespace netfuzz
