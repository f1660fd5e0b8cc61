#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace netfuzz {

using NetId = std::uint32_t;
using GateId = std::uint32_t;

inline constexpr NetId kNoNet = 0xffffffffu;
inline constexpr GateId kNoGate = 0xffffffffu;

enum class GateKind : std::uint8_t {
  And,
  Nand,
  Or,
  Nor,
  Xor,
  Xnor,
  Not,
  Buf,
  Dff,
  Const0,
  Const1,
};

const char* to_string(GateKind kind);

/// Case-insensitive lookup; returns nullopt for unknown kinds.
std::optional<GateKind> gate_kind_from(std::string_view text);

constexpr bool is_const(GateKind kind) {
  return kind == GateKind::Const0 || kind == GateKind::Const1;
}

constexpr bool is_unary(GateKind kind) {
  return kind == GateKind::Not || kind == GateKind::Buf || kind == GateKind::Dff;
}

/// true if `arity` is a legal input count for `kind`
/// (unary kinds take exactly 1, constants 0, everything else >= 2).
constexpr bool arity_ok(GateKind kind, std::size_t arity) {
  if (is_const(kind)) return arity == 0;
  if (is_unary(kind)) return arity == 1;
  return arity >= 2;
}

/// Input problem: malformed netlist text, bad cell map, invalid configuration.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad flags, impossible strategy, missing files).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace netfuzz
