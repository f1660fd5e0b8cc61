#include "netfuzz/netlist.hpp"

#include <algorithm>
#include <queue>

namespace netfuzz {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::And: return "AND";
    case GateKind::Nand: return "NAND";
    case GateKind::Or: return "OR";
    case GateKind::Nor: return "NOR";
    case GateKind::Xor: return "XOR";
    case GateKind::Xnor: return "XNOR";
    case GateKind::Not: return "NOT";
    case GateKind::Buf: return "BUF";
    case GateKind::Dff: return "DFF";
    case GateKind::Const0: return "CONST0";
    case GateKind::Const1: return "CONST1";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "AND") return GateKind::And;
  if (upper == "NAND") return GateKind::Nand;
  if (upper == "OR") return GateKind::Or;
  if (upper == "NOR") return GateKind::Nor;
  if (upper == "XOR") return GateKind::Xor;
  if (upper == "XNOR") return GateKind::Xnor;
  if (upper == "NOT" || upper == "INV") return GateKind::Not;
  if (upper == "BUF" || upper == "BUFF") return GateKind::Buf;
  if (upper == "DFF") return GateKind::Dff;
  if (upper == "CONST0") return GateKind::Const0;
  if (upper == "CONST1") return GateKind::Const1;
  return std::nullopt;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NetId Netlist::net_by_name(std::string_view name) const {
  if (auto id = find_net(name)) return *id;
  throw ParseError("unknown net '" + std::string(name) + "'");
}

namespace {

std::string at_line(int line) {
  return line > 0 ? " (line " + std::to_string(line) + ")" : "";
}

}  // namespace

NetlistBuilder::NetlistBuilder(std::string name) { netlist_.name_ = std::move(name); }

NetId NetlistBuilder::add_net(std::string_view name, int source_line) {
  auto it = netlist_.index_.find(std::string(name));
  if (it != netlist_.index_.end()) return it->second;
  const NetId id = static_cast<NetId>(netlist_.nets_.size());
  netlist_.nets_.push_back(Net{std::string(name), kNoGate, {}});
  netlist_.pi_flags_.push_back(0);
  netlist_.index_.emplace(std::string(name), id);
  net_line_.push_back(source_line);
  drive_line_.push_back(0);
  return id;
}

void NetlistBuilder::mark_input(NetId id, int source_line) {
  if (netlist_.nets_[id].driver != kNoGate)
    throw ParseError("net '" + netlist_.nets_[id].name +
                     "' declared INPUT but already driven" + at_line(source_line));
  if (!netlist_.pi_flags_[id]) {
    netlist_.pi_flags_[id] = 1;
    netlist_.primary_inputs_.push_back(id);
    drive_line_[id] = source_line;
  }
}

void NetlistBuilder::mark_output(NetId id) { netlist_.primary_outputs_.push_back(id); }

GateId NetlistBuilder::add_gate(GateKind kind, NetId output, std::vector<NetId> inputs,
                                int source_line) {
  if (!arity_ok(kind, inputs.size()))
    throw ParseError(std::string("gate kind ") + to_string(kind) + " cannot take " +
                     std::to_string(inputs.size()) + " input(s)" + at_line(source_line));
  Net& out = netlist_.nets_[output];
  if (out.driver != kNoGate || netlist_.pi_flags_[output])
    throw ParseError("net '" + out.name + "' has more than one driver" +
                     at_line(source_line) +
                     (drive_line_[output] > 0
                          ? ", first driven at line " + std::to_string(drive_line_[output])
                          : ""));
  const GateId gid = static_cast<GateId>(netlist_.gates_.size());
  for (std::uint32_t pin = 0; pin < inputs.size(); ++pin)
    netlist_.nets_[inputs[pin]].sinks.push_back(Sink{gid, pin});
  out.driver = gid;
  drive_line_[output] = source_line;
  if (kind == GateKind::Dff) netlist_.dff_gates_.push_back(gid);
  netlist_.gates_.push_back(Gate{kind, std::move(inputs), output});
  return gid;
}

bool NetlistBuilder::has_net(std::string_view name) const {
  return netlist_.index_.count(std::string(name)) > 0;
}

NetId NetlistBuilder::net_id(std::string_view name) const {
  return netlist_.index_.at(std::string(name));
}

Netlist NetlistBuilder::finish() {
  for (NetId id = 0; id < netlist_.nets_.size(); ++id) {
    const Net& net = netlist_.nets_[id];
    if (net.driver == kNoGate && !netlist_.pi_flags_[id])
      throw ParseError("undefined net '" + net.name + "': referenced but never driven" +
                       at_line(net_line_[id]));
  }
  topological_sort(netlist_);  // throws on combinational cycles
  Netlist done = std::move(netlist_);
  netlist_ = Netlist{};
  net_line_.clear();
  drive_line_.clear();
  return done;
}

std::vector<GateId> topological_sort(const Netlist& netlist) {
  const std::size_t n = netlist.gate_count();
  std::vector<std::uint32_t> pending(n, 0);

  // A gate waits on inputs driven by combinational gates; PI, flip-flop and
  // constant sources are available from the start.
  for (GateId g = 0; g < n; ++g) {
    for (NetId in : netlist.gate(g).inputs) {
      const GateId drv = netlist.net(in).driver;
      if (drv != kNoGate && netlist.gate(drv).kind != GateKind::Dff &&
          !is_const(netlist.gate(drv).kind))
        ++pending[g];
    }
  }

  std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
  for (GateId g = 0; g < n; ++g)
    if (pending[g] == 0) ready.push(g);

  std::vector<GateId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const GateId g = ready.top();
    ready.pop();
    order.push_back(g);
    if (netlist.gate(g).kind == GateKind::Dff) continue;  // sequential edge cut
    for (const Sink& sink : netlist.net(netlist.gate(g).output).sinks)
      if (--pending[sink.gate] == 0) ready.push(sink.gate);
  }

  if (order.size() != n) {
    for (GateId g = 0; g < n; ++g)
      if (pending[g] > 0)
        throw ParseError("combinational cycle through net '" +
                         netlist.net(netlist.gate(g).output).name + "'");
  }
  return order;
}

Cone fanin_cone(const Netlist& netlist, NetId net) {
  if (net >= netlist.net_count()) throw ParseError("unknown net id");
  std::vector<std::uint8_t> net_seen(netlist.net_count(), 0);
  std::vector<std::uint8_t> gate_seen(netlist.gate_count(), 0);
  std::vector<NetId> stack{net};
  net_seen[net] = 1;

  Cone cone;
  while (!stack.empty()) {
    const NetId cur = stack.back();
    stack.pop_back();
    cone.nets.push_back(cur);
    const GateId drv = netlist.net(cur).driver;
    if (drv == kNoGate) continue;                           // primary input
    if (netlist.gate(drv).kind == GateKind::Dff) continue;  // sequential boundary
    if (!gate_seen[drv]) {
      gate_seen[drv] = 1;
      cone.gates.push_back(drv);
      for (NetId in : netlist.gate(drv).inputs) {
        if (!net_seen[in]) {
          net_seen[in] = 1;
          stack.push_back(in);
        }
      }
    }
  }
  std::sort(cone.nets.begin(), cone.nets.end());
  std::sort(cone.gates.begin(), cone.gates.end());
  return cone;
}

namespace {

std::uint32_t fanout_size(const Netlist& netlist, NetId net,
                          std::vector<std::uint32_t>& mark, std::uint32_t stamp) {
  std::vector<NetId> stack{net};
  mark[net] = stamp;
  std::uint32_t count = 0;
  while (!stack.empty()) {
    const NetId cur = stack.back();
    stack.pop_back();
    for (const Sink& sink : netlist.net(cur).sinks) {
      const Gate& g = netlist.gate(sink.gate);
      if (g.kind == GateKind::Dff) continue;  // stop at sequential boundary
      const NetId out = g.output;
      if (mark[out] != stamp) {
        mark[out] = stamp;
        ++count;
        stack.push_back(out);
      }
    }
  }
  return count;
}

}  // namespace

FanMetrics fan_metrics(const Netlist& netlist, NetId net, FanMode mode) {
  if (net >= netlist.net_count()) throw ParseError("unknown net id");
  FanMetrics m;
  if (mode == FanMode::Immediate) {
    const GateId drv = netlist.net(net).driver;
    m.fi = drv == kNoGate ? 0 : static_cast<std::uint32_t>(netlist.gate(drv).inputs.size());
    m.fo = static_cast<std::uint32_t>(netlist.net(net).sinks.size());
    return m;
  }
  m.fi = static_cast<std::uint32_t>(fanin_cone(netlist, net).nets.size() - 1);
  std::vector<std::uint32_t> mark(netlist.net_count(), 0);
  m.fo = fanout_size(netlist, net, mark, 1);
  return m;
}

std::vector<FanMetrics> fan_metrics_all(const Netlist& netlist, FanMode mode) {
  const std::size_t n = netlist.net_count();
  std::vector<FanMetrics> all(n);
  if (mode == FanMode::Immediate) {
    for (NetId id = 0; id < n; ++id) all[id] = fan_metrics(netlist, id, mode);
    return all;
  }
  std::vector<std::uint32_t> mark(n, 0);
  for (NetId id = 0; id < n; ++id) {
    all[id].fi = static_cast<std::uint32_t>(fanin_cone(netlist, id).nets.size() - 1);
    all[id].fo = fanout_size(netlist, id, mark, id + 1);
  }
  return all;
}

std::vector<std::uint32_t> net_depths(const Netlist& netlist) {
  std::vector<std::uint32_t> depth(netlist.net_count(), 0);
  for (GateId g : topological_sort(netlist)) {
    const Gate& gate = netlist.gate(g);
    if (gate.kind == GateKind::Dff || is_const(gate.kind)) continue;  // sources
    std::uint32_t best = UINT32_MAX;
    for (NetId in : gate.inputs) best = std::min(best, depth[in]);
    depth[gate.output] = best == UINT32_MAX ? 1 : best + 1;
  }
  return depth;
}

}  // namespace netfuzz
