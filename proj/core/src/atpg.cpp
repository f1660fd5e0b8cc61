#include "netfuzz/atpg.hpp"

#include <algorithm>

#include "netfuzz/logic.hpp"

namespace netfuzz {

namespace {

struct JustifyContext {
  const Netlist& netlist;
  std::vector<GateId> topo;
  std::vector<std::uint32_t> depth;

  explicit JustifyContext(const Netlist& nl)
      : netlist(nl), topo(topological_sort(nl)), depth(net_depths(nl)) {}
};

struct Decision {
  NetId input;
  bool value;
  bool flipped;  // second branch already taken
};

class JustifyRun {
public:
  JustifyRun(const JustifyContext& ctx, Objective objective)
      : ctx_(ctx), objective_(objective), values_(ctx.netlist.net_count(), Tri::X) {
    const Cone cone = fanin_cone(ctx.netlist, objective.net);
    cone_nets_ = cone.nets;
    std::vector<std::uint8_t> gate_in(ctx.netlist.gate_count(), 0);
    for (GateId g : cone.gates) gate_in[g] = 1;
    for (GateId g : ctx.topo)
      if (gate_in[g]) cone_gates_.push_back(g);  // topo order restricted to the cone
  }

  AtpgResult run(const AtpgLimits& limits) {
    const Tri want = tri_from_bit(objective_.value);
    evaluate();
    AtpgResult result;
    while (true) {
      const Tri got = values_[objective_.net];
      if (got == want) {
        result.outcome = AtpgOutcome::Satisfied;
        for (const Decision& d : stack_) result.cube.set(d.input, d.value);
        return result;
      }
      if (got != Tri::X) {
        // Conflict: flip the deepest unflipped decision.
        while (!stack_.empty() && stack_.back().flipped) stack_.pop_back();
        if (stack_.empty()) {
          result.outcome = AtpgOutcome::Unjustifiable;
          return result;
        }
        if (result.backtracks >= limits.max_backtracks) {
          result.outcome = AtpgOutcome::Aborted;
          return result;
        }
        ++result.backtracks;
        stack_.back().value = !stack_.back().value;
        stack_.back().flipped = true;
      } else {
        const auto [input, value] = backtrace();
        stack_.push_back(Decision{input, value, false});
      }
      evaluate();
    }
  }

private:
  void evaluate() {
    for (NetId n : cone_nets_) values_[n] = Tri::X;
    for (const Decision& d : stack_) values_[d.input] = tri_from_bit(d.value);
    for (GateId g : cone_gates_) {
      const Gate& gate = ctx_.netlist.gate(g);
      ins_.assign(gate.inputs.size(), Tri::X);
      for (std::size_t i = 0; i < gate.inputs.size(); ++i) ins_[i] = values_[gate.inputs[i]];
      values_[gate.output] = eval_gate3v(gate.kind, ins_);
    }
  }

  /// Walks from the objective toward an unassigned controllable input along
  /// X-valued nets, choosing the shallowest X input at every gate.
  std::pair<NetId, bool> backtrace() const {
    NetId net = objective_.net;
    bool want = objective_.value;
    while (!ctx_.netlist.is_controllable(net)) {
      const Gate& gate = ctx_.netlist.gate(ctx_.netlist.net(net).driver);

      NetId pick = kNoNet;
      std::uint32_t best = UINT32_MAX;
      bool known_parity = false;
      for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
        const NetId in = gate.inputs[i];
        if (values_[in] == Tri::X) {
          if (ctx_.depth[in] < best) {
            best = ctx_.depth[in];
            pick = in;
          }
        } else {
          known_parity ^= (values_[in] == Tri::T);
        }
      }
      if (pick == kNoNet)
        throw std::logic_error("backtrace from a non-X net");  // algebra guarantees an X input

      bool next_want = want;
      switch (gate.kind) {
        case GateKind::And: next_want = want; break;
        case GateKind::Nand: next_want = !want; break;
        case GateKind::Or: next_want = want; break;
        case GateKind::Nor: next_want = !want; break;
        case GateKind::Not: next_want = !want; break;
        case GateKind::Buf: next_want = want; break;
        case GateKind::Xor:
        case GateKind::Xnor: {
          // Remaining X inputs other than the pick are treated as 0.
          const bool required = (gate.kind == GateKind::Xor) ? want : !want;
          next_want = required ^ known_parity;
          break;
        }
        default: break;  // Dff/Const outputs never reach here
      }
      net = pick;
      want = next_want;
    }
    return {net, want};
  }

  const JustifyContext& ctx_;
  Objective objective_;
  std::vector<Tri> values_;
  std::vector<NetId> cone_nets_;
  std::vector<GateId> cone_gates_;
  std::vector<Decision> stack_;
  std::vector<Tri> ins_;
};

AtpgResult justify_with(const JustifyContext& ctx, Objective objective, AtpgLimits limits) {
  if (objective.net >= ctx.netlist.net_count()) throw ParseError("unknown objective net");
  if (ctx.netlist.is_const_driven(objective.net))
    throw ParseError("objective net '" + ctx.netlist.net(objective.net).name +
                     "' is constant-driven");
  JustifyRun run(ctx, objective);
  return run.run(limits);
}

}  // namespace

AtpgResult justify(const Netlist& netlist, Objective objective, AtpgLimits limits) {
  JustifyContext ctx(netlist);
  return justify_with(ctx, objective, limits);
}

std::vector<std::pair<NetId, HierId>> get_id(const Netlist& netlist,
                                             std::span<const GateId> topo_order,
                                             std::span<const NetId> targets) {
  std::vector<std::int64_t> gate_index(netlist.gate_count(), -1);
  for (std::size_t i = 0; i < topo_order.size(); ++i) gate_index[topo_order[i]] = i;

  std::vector<std::pair<NetId, HierId>> ids;
  ids.reserve(targets.size());
  for (NetId net : targets) {
    if (net >= netlist.net_count()) throw ParseError("unknown target net");
    const GateId drv = netlist.net(net).driver;
    ids.emplace_back(net, HierId{netlist.net(net).name,
                                 drv == kNoGate ? -1 : gate_index[drv]});
  }
  return ids;
}

ActivationPatterns gen_activation_patterns(const Netlist& netlist,
                                           std::span<const NetId> targets,
                                           AtpgLimits limits) {
  if (targets.empty()) throw ConfigError("pattern generation with no targets");
  JustifyContext ctx(netlist);

  ActivationPatterns out;
  out.entries.reserve(targets.size());
  for (NetId net : targets) {
    if (net >= netlist.net_count()) throw ParseError("unknown target net");
    ActivationPatterns::Entry entry;
    entry.net = net;
    if (netlist.is_const_driven(net)) {
      // Selection rejects these; if one is forced through anyway, the
      // constant polarity holds vacuously and the other is unjustifiable.
      const bool one = netlist.gate(netlist.net(net).driver).kind == GateKind::Const1;
      (one ? entry.cube1 : entry.cube0) = Cube{};
      (one ? entry.outcome1 : entry.outcome0) = AtpgOutcome::Satisfied;
      out.entries.push_back(std::move(entry));
      continue;
    }
    AtpgResult r0 = justify_with(ctx, Objective{net, false}, limits);
    AtpgResult r1 = justify_with(ctx, Objective{net, true}, limits);
    entry.outcome0 = r0.outcome;
    entry.outcome1 = r1.outcome;
    if (r0.outcome == AtpgOutcome::Satisfied) entry.cube0 = std::move(r0.cube);
    if (r1.outcome == AtpgOutcome::Satisfied) entry.cube1 = std::move(r1.cube);
    if (!entry.cube0 && !entry.cube1) out.untestable.push_back(net);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::string write_cube_dump(const Netlist& netlist, const ActivationPatterns& patterns) {
  std::string out;
  auto append_cube = [&](NetId net, int polarity, const Cube& cube) {
    out += netlist.net(net).name;
    out += ' ';
    out += static_cast<char>('0' + polarity);
    for (const auto& [in, value] : cube.literals()) {
      out += ' ';
      out += netlist.net(in).name;
      out += '=';
      out += value ? '1' : '0';
    }
    out += '\n';
  };
  for (const auto& entry : patterns.entries) {
    if (entry.cube0) append_cube(entry.net, 0, *entry.cube0);
    if (entry.cube1) append_cube(entry.net, 1, *entry.cube1);
  }
  return out;
}

}  // namespace netfuzz
