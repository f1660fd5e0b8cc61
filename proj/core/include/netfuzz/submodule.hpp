#pragma once

#include <string>
#include <vector>

#include "netfuzz/atpg.hpp"
#include "netfuzz/merge.hpp"
#include "netfuzz/netlist.hpp"
#include "netfuzz/select.hpp"

namespace netfuzz {

/// Extracted driving subcircuit for a group of targets. The subnetlist is the
/// union of the targets' fan-in cones truncated at the main design's PIs and
/// flip-flop outputs; the truncation nets become subnetlist PIs.
struct SubNetlist {
  Netlist netlist;
  std::vector<std::pair<NetId, NetId>> boundary;    // sub PI -> main net
  std::vector<std::pair<NetId, NetId>> target_map;  // sub target -> main net

  std::size_t sub_target_count() const { return target_map.size(); }
  std::size_t main_boundary_count() const { return boundary.size(); }
};

SubNetlist extract_submodule(const Netlist& netlist, std::span<const NetId> targets);

/// Sidecar for a persisted subnetlist: `sub_pi main_net` lines.
std::string write_boundary_map(const Netlist& main, const SubNetlist& sub);

/// Submodule-scoped pattern generation: runs id/pattern/merge on the
/// subnetlist, then back-justifies each bin's boundary requirements on the
/// main design and re-merges into cubes over main-design inputs. Targets whose
/// boundary requirements cannot be justified or merged move to `conflicted`.
/// All net ids in the result refer to the main design.
struct SubmodulePatterns {
  std::vector<MergedPattern> bins;
  std::vector<NetId> n0, n1;       // flattened member sets across bins
  std::vector<NetId> conflicted;   // N_C over main-design ids
};

SubmodulePatterns pattern_generation_submodule(const Netlist& main, const SubNetlist& sub,
                                               bool multi_bin, AtpgLimits limits = {});

/// Logic-free monitor shell: one input port per target, port names sanitized
/// to identifier characters, ordered by descending cost then name. Name
/// collisions after sanitization raise ParseError listing the clashes.
std::string emit_monitor(const Netlist& netlist, const TargetSet& targets,
                         std::string_view module_name = "netfuzz_monitor");

}  // namespace netfuzz
