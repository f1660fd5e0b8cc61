#include "netfuzz/logic.hpp"

namespace netfuzz {

namespace {

Tri eval_and(std::span<const Tri> inputs) {
  bool saw_x = false;
  for (Tri v : inputs) {
    if (v == Tri::F) return Tri::F;
    if (v == Tri::X) saw_x = true;
  }
  return saw_x ? Tri::X : Tri::T;
}

Tri eval_or(std::span<const Tri> inputs) {
  bool saw_x = false;
  for (Tri v : inputs) {
    if (v == Tri::T) return Tri::T;
    if (v == Tri::X) saw_x = true;
  }
  return saw_x ? Tri::X : Tri::F;
}

Tri eval_xor(std::span<const Tri> inputs) {
  bool parity = false;
  for (Tri v : inputs) {
    if (v == Tri::X) return Tri::X;
    parity ^= (v == Tri::T);
  }
  return tri_from_bit(parity);
}

}  // namespace

Tri eval_gate3v(GateKind kind, std::span<const Tri> inputs) {
  if (!arity_ok(kind, inputs.size()))
    throw ParseError(std::string("arity mismatch: ") + to_string(kind) + " with " +
                     std::to_string(inputs.size()) + " input(s)");
  switch (kind) {
    case GateKind::And: return eval_and(inputs);
    case GateKind::Nand: return tri_not(eval_and(inputs));
    case GateKind::Or: return eval_or(inputs);
    case GateKind::Nor: return tri_not(eval_or(inputs));
    case GateKind::Xor: return eval_xor(inputs);
    case GateKind::Xnor: return tri_not(eval_xor(inputs));
    case GateKind::Not: return tri_not(inputs[0]);
    case GateKind::Buf: return inputs[0];
    case GateKind::Dff: return inputs[0];  // combinational view: pass-through
    case GateKind::Const0: return Tri::F;
    case GateKind::Const1: return Tri::T;
  }
  return Tri::X;
}

}  // namespace netfuzz
