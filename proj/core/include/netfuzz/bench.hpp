#pragma once

#include <string>
#include <string_view>

#include "netfuzz/netlist.hpp"

namespace netfuzz {

/// Parses ISCAS BENCH text: INPUT(x) / OUTPUT(y) declarations, `out = KIND(in,
/// ...)` gate lines, `#` comments. Net ids are assigned in order of first
/// appearance, so identical text always yields identical ids.
Netlist parse_bench(std::string_view text, std::string_view name = "bench");

Netlist parse_bench_file(const std::string& path);

/// Inverse of parse_bench: reparsing the result yields an isomorphic netlist.
std::string write_bench(const Netlist& netlist);

void write_bench_file(const Netlist& netlist, const std::string& path);

}  // namespace netfuzz
