#pragma once

#include <cstdint>
#include <span>

#include "netfuzz/types.hpp"

namespace netfuzz {

/// Three-valued signal: 0, 1, or unknown/don't-care.
enum class Tri : std::uint8_t { F = 0, T = 1, X = 2 };

constexpr Tri tri_not(Tri v) {
  return v == Tri::X ? Tri::X : (v == Tri::T ? Tri::F : Tri::T);
}

constexpr Tri tri_from_bit(bool b) { return b ? Tri::T : Tri::F; }

constexpr char tri_char(Tri v) { return v == Tri::X ? 'X' : (v == Tri::T ? '1' : '0'); }

/// Pessimistic 3-valued evaluation. Controlling values short-circuit: AND with
/// any 0 is 0 even if other inputs are X; XOR/XNOR with any X is X.
/// Throws ParseError on an arity mismatch.
Tri eval_gate3v(GateKind kind, std::span<const Tri> inputs);

}  // namespace netfuzz
