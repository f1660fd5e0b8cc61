#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netfuzz/netlist.hpp"

namespace netfuzz {

/// Library cell description: gate kind plus pin order, data inputs first and
/// the output pin last. Connections to pins not listed here (clocks, unused
/// test pins) are ignored.
struct CellSpec {
  GateKind kind;
  std::vector<std::string> pins;
};

struct CellMap {
  std::unordered_map<std::string, CellSpec> cells;

  bool has(const std::string& name) const { return cells.count(name) > 0; }
  const CellSpec& at(const std::string& name) const { return cells.at(name); }
};

/// Cell map text: one cell per line, `cellname kind pin...`, '#' comments.
CellMap parse_cell_map(std::string_view text);
CellMap load_cell_map(const std::string& path);

/// Reads a gate-level structural Verilog subset: scalar nets, module
/// definitions made of library-cell or submodule instantiations (named or
/// positional connections). Hierarchy is flattened; internal nets of an
/// instance `b0` appear as `b0.<net>`. Behavioral constructs (always, assign,
/// initial, reg) and bus declarations are rejected, not interpreted.
Netlist parse_structural_verilog(std::string_view text, const CellMap& cell_map,
                                 std::string_view source_name = "verilog");

Netlist parse_structural_verilog_file(const std::string& path, const CellMap& cell_map);

}  // namespace netfuzz
