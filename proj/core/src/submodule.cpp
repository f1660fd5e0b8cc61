#include "netfuzz/submodule.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace netfuzz {

SubNetlist extract_submodule(const Netlist& netlist, std::span<const NetId> targets) {
  if (targets.empty()) throw ConfigError("submodule extraction with no targets");

  std::vector<std::uint8_t> net_in(netlist.net_count(), 0);
  std::vector<std::uint8_t> gate_in(netlist.gate_count(), 0);
  for (NetId t : targets) {
    const Cone cone = fanin_cone(netlist, t);  // throws on unknown nets
    for (NetId n : cone.nets) net_in[n] = 1;
    for (GateId g : cone.gates) gate_in[g] = 1;
  }

  NetlistBuilder builder(netlist.name() + "_sub");

  // Truncation points (main PIs and flip-flop outputs) become the sub PIs, in
  // ascending main-net order so extraction is deterministic.
  std::vector<NetId> boundary_nets;
  for (NetId n = 0; n < netlist.net_count(); ++n)
    if (net_in[n] && netlist.is_controllable(n)) boundary_nets.push_back(n);

  SubNetlist sub;
  for (NetId main_net : boundary_nets) {
    const NetId sub_net = builder.add_net(netlist.net(main_net).name);
    builder.mark_input(sub_net);
    sub.boundary.emplace_back(sub_net, main_net);
  }

  std::vector<GateId> order = topological_sort(netlist);
  for (GateId g : order) {
    if (!gate_in[g]) continue;
    const Gate& gate = netlist.gate(g);
    std::vector<NetId> inputs;
    inputs.reserve(gate.inputs.size());
    for (NetId in : gate.inputs) inputs.push_back(builder.add_net(netlist.net(in).name));
    builder.add_gate(gate.kind, builder.add_net(netlist.net(gate.output).name),
                     std::move(inputs));
  }

  std::unordered_set<NetId> seen;
  std::vector<NetId> unique_targets;
  for (NetId t : targets)
    if (seen.insert(t).second) unique_targets.push_back(t);
  for (NetId t : unique_targets) builder.mark_output(builder.net_id(netlist.net(t).name));

  sub.netlist = builder.finish();
  for (NetId t : unique_targets)
    sub.target_map.emplace_back(sub.netlist.net_by_name(netlist.net(t).name), t);
  // finish() invalidated nothing: boundary sub ids were assigned first and are
  // stable because ids are creation-ordered.
  return sub;
}

std::string write_boundary_map(const Netlist& main, const SubNetlist& sub) {
  std::ostringstream out;
  for (const auto& [sub_net, main_net] : sub.boundary)
    out << sub.netlist.net(sub_net).name << ' ' << main.net(main_net).name << '\n';
  return out.str();
}

namespace {

struct BinMember {
  NetId sub_net;
  NetId main_net;
  bool polarity;
  const Cube* sub_cube;
};

}  // namespace

SubmodulePatterns pattern_generation_submodule(const Netlist& main, const SubNetlist& sub,
                                               bool multi_bin, AtpgLimits limits) {
  std::vector<NetId> sub_targets;
  std::unordered_map<NetId, NetId> to_main;
  for (const auto& [s, m] : sub.target_map) {
    sub_targets.push_back(s);
    to_main.emplace(s, m);
  }
  std::unordered_map<NetId, NetId> boundary_to_main;
  for (const auto& [s, m] : sub.boundary) boundary_to_main.emplace(s, m);

  const std::vector<GateId> sub_topo = topological_sort(sub.netlist);
  get_id(sub.netlist, sub_topo, sub_targets);  // ids exist and are unique by construction

  const ActivationPatterns pats = gen_activation_patterns(sub.netlist, sub_targets, limits);
  std::unordered_map<NetId, const ActivationPatterns::Entry*> entry_of;
  for (const auto& e : pats.entries) entry_of.emplace(e.net, &e);

  const MergeResult merged = merge_pattern(sub.netlist, pats, multi_bin);

  SubmodulePatterns out;
  for (NetId n : merged.primary.conflicts) out.conflicted.push_back(to_main.at(n));

  std::vector<const MergedPattern*> bins{&merged.primary};
  for (const MergedPattern& b : merged.overflow) bins.push_back(&b);

  for (const MergedPattern* bin : bins) {
    std::vector<BinMember> members;
    for (NetId n : bin->members0)
      members.push_back({n, to_main.at(n), false, &*entry_of.at(n)->cube0});
    for (NetId n : bin->members1)
      members.push_back({n, to_main.at(n), true, &*entry_of.at(n)->cube1});
    if (members.empty()) continue;

    // Back-justify the bin's boundary requirements on the main design. A
    // boundary literal that fails (unjustifiable, aborted, or conflicting
    // with requirements already placed) drops the members that need it, and
    // the bin is rebuilt from the survivors.
    while (!members.empty()) {
      Cube bin_sub_cube;
      for (const BinMember& m : members) bin_sub_cube = cube_union(bin_sub_cube, *m.sub_cube);

      Cube main_cube;
      NetId failed_sub_pi = kNoNet;
      for (const auto& [sub_pi, value] : bin_sub_cube.literals()) {
        const NetId main_net = boundary_to_main.at(sub_pi);
        if (main.is_controllable(main_net)) {
          const auto existing = main_cube.get(main_net);
          if (existing && *existing != value) {
            failed_sub_pi = sub_pi;
            break;
          }
          main_cube.set(main_net, value);
          continue;
        }
        const AtpgResult just = justify(main, Objective{main_net, value}, limits);
        if (just.outcome != AtpgOutcome::Satisfied || cubes_conflict(main_cube, just.cube)) {
          failed_sub_pi = sub_pi;
          break;
        }
        main_cube = cube_union(main_cube, just.cube);
      }

      if (failed_sub_pi == kNoNet) {
        MergedPattern final_bin;
        final_bin.cube = std::move(main_cube);
        for (const BinMember& m : members)
          (m.polarity ? final_bin.members1 : final_bin.members0).push_back(m.main_net);
        for (NetId n : final_bin.members0) out.n0.push_back(n);
        for (NetId n : final_bin.members1) out.n1.push_back(n);
        out.bins.push_back(std::move(final_bin));
        break;
      }

      std::vector<BinMember> survivors;
      for (const BinMember& m : members) {
        if (m.sub_cube->get(failed_sub_pi))
          out.conflicted.push_back(m.main_net);
        else
          survivors.push_back(m);
      }
      members = std::move(survivors);
    }
  }
  return out;
}

std::string emit_monitor(const Netlist& netlist, const TargetSet& targets,
                         std::string_view module_name) {
  if (targets.members.empty()) throw ConfigError("monitor with no targets");

  struct Port {
    std::string sanitized;
    std::string original;
    double cost;
  };
  std::vector<Port> ports;
  ports.reserve(targets.members.size());
  for (std::size_t i = 0; i < targets.members.size(); ++i) {
    const std::string& name = netlist.net(targets.members[i]).name;
    std::string s;
    s.reserve(name.size());
    for (char c : name)
      s += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) s = "n_" + s;
    ports.push_back({std::move(s), name, targets.has_costs() ? targets.costs[i] : 0.0});
  }

  std::sort(ports.begin(), ports.end(), [](const Port& a, const Port& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.original < b.original;
  });

  std::unordered_map<std::string, std::string> first_owner;
  std::string collisions;
  for (const Port& p : ports) {
    const auto [it, fresh] = first_owner.emplace(p.sanitized, p.original);
    if (!fresh)
      collisions += "  '" + it->second + "' vs '" + p.original + "' -> " + p.sanitized + "\n";
  }
  if (!collisions.empty())
    throw ParseError("monitor port names collide after sanitization:\n" + collisions);

  std::ostringstream out;
  out << "// toggle monitor shell for " << netlist.name() << "\n";
  out << "module " << module_name << " (\n";
  for (std::size_t i = 0; i < ports.size(); ++i)
    out << "  input " << ports[i].sanitized << (i + 1 < ports.size() ? "," : "") << "\n";
  out << ");\nendmodule\n";
  return out.str();
}

}  // namespace netfuzz
