#pragma once

// Independent oracle: a naive recursive 3-valued evaluator with its own truth
// tables and no topological order, memoized per evaluation. Deliberately kept
// free of netfuzz/logic.hpp and netfuzz/simulator.hpp logic so it can check
// them.

#include <map>
#include <stdexcept>
#include <vector>

#include "netfuzz/netlist.hpp"

namespace refsim {

using netfuzz::GateId;
using netfuzz::GateKind;
using netfuzz::Netlist;
using netfuzz::NetId;

// '0', '1', 'x'
inline char r_not(char a) { return a == 'x' ? 'x' : (a == '1' ? '0' : '1'); }

inline char r_and(const std::vector<char>& v) {
  bool any_x = false;
  for (char c : v) {
    if (c == '0') return '0';
    if (c == 'x') any_x = true;
  }
  return any_x ? 'x' : '1';
}

inline char r_or(const std::vector<char>& v) {
  bool any_x = false;
  for (char c : v) {
    if (c == '1') return '1';
    if (c == 'x') any_x = true;
  }
  return any_x ? 'x' : '0';
}

inline char r_xor(const std::vector<char>& v) {
  int ones = 0;
  for (char c : v) {
    if (c == 'x') return 'x';
    if (c == '1') ++ones;
  }
  return (ones % 2) ? '1' : '0';
}

inline char r_gate(GateKind kind, const std::vector<char>& v) {
  switch (kind) {
    case GateKind::And: return r_and(v);
    case GateKind::Nand: return r_not(r_and(v));
    case GateKind::Or: return r_or(v);
    case GateKind::Nor: return r_not(r_or(v));
    case GateKind::Xor: return r_xor(v);
    case GateKind::Xnor: return r_not(r_xor(v));
    case GateKind::Not: return r_not(v.at(0));
    case GateKind::Buf: return v.at(0);
    case GateKind::Const0: return '0';
    case GateKind::Const1: return '1';
    case GateKind::Dff: throw std::logic_error("refsim: combinational eval hit a DFF");
  }
  return 'x';
}

/// Recursive evaluation of one net given primary inputs and flip-flop output
/// values ('x' when absent from the maps).
class Eval {
public:
  Eval(const Netlist& nl, const std::map<NetId, char>& pis, const std::map<NetId, char>& state)
      : nl_(nl), pis_(pis), state_(state) {}

  char value(NetId net) {
    const auto hit = memo_.find(net);
    if (hit != memo_.end()) return hit->second;
    char v = 'x';
    const GateId drv = nl_.net(net).driver;
    if (drv == netfuzz::kNoGate || nl_.gate(drv).kind == GateKind::Dff) {
      const auto& table = drv == netfuzz::kNoGate ? pis_ : state_;
      const auto it = table.find(net);
      v = it == table.end() ? 'x' : it->second;
    } else {
      std::vector<char> ins;
      for (NetId in : nl_.gate(drv).inputs) ins.push_back(value(in));
      v = r_gate(nl_.gate(drv).kind, ins);
    }
    memo_.emplace(net, v);
    return v;
  }

private:
  const Netlist& nl_;
  const std::map<NetId, char>& pis_;
  const std::map<NetId, char>& state_;
  std::map<NetId, char> memo_;
};

/// Step-by-step sequential reference: flip-flops start at 'x' (or '0'), each
/// cycle evaluates every net recursively, then latches DFF inputs.
class SeqSim {
public:
  explicit SeqSim(const Netlist& nl, char init = 'x') : nl_(nl) {
    for (GateId g : nl.dff_gates()) state_[nl.gate(g).output] = init;
  }

  /// Returns the values of every net for this cycle.
  std::vector<char> step(const std::vector<std::uint8_t>& pi_bits) {
    const auto pis = nl_.primary_inputs();
    if (pi_bits.size() != pis.size()) throw std::logic_error("refsim: width mismatch");
    std::map<NetId, char> pi_vals;
    for (std::size_t i = 0; i < pis.size(); ++i)
      pi_vals[pis[i]] = pi_bits[i] ? '1' : '0';

    Eval eval(nl_, pi_vals, state_);
    std::vector<char> values(nl_.net_count(), 'x');
    for (NetId id = 0; id < nl_.net_count(); ++id) values[id] = eval.value(id);

    std::map<NetId, char> next;
    for (GateId g : nl_.dff_gates())
      next[nl_.gate(g).output] = values[nl_.gate(g).inputs[0]];
    state_ = std::move(next);
    return values;
  }

private:
  const Netlist& nl_;
  std::map<NetId, char> state_;
};

}  // namespace refsim
