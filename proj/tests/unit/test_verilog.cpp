#include <doctest.h>

#include "netfuzz/verilog.hpp"
#include "support/fixtures.hpp"

using namespace netfuzz;

namespace {

CellMap tiny_map() {
  return parse_cell_map(
      "nand2 NAND A B Y\n"
      "inv   NOT  A Y\n"
      "dff   DFF  D Q\n");
}

}  // namespace

TEST_CASE("cell map parsing") {
  const CellMap map = tiny_map();
  CHECK(map.has("nand2"));
  CHECK(map.at("nand2").kind == GateKind::Nand);
  CHECK(map.at("nand2").pins == std::vector<std::string>{"A", "B", "Y"});
  CHECK_THROWS_AS(parse_cell_map("bad FROB A Y"), ParseError);
  CHECK_THROWS_AS(parse_cell_map("lonely NAND"), ParseError);
  CHECK_THROWS_AS(parse_cell_map("d2 DFF D E Q"), ParseError);  // DFF takes one input
}

TEST_CASE("single mapped instance") {
  const Netlist nl = parse_structural_verilog(
      "module m (input a, input b, output y);\n"
      "  nand2 g0 (.A(a), .B(b), .Y(y));\n"
      "endmodule\n",
      tiny_map());
  REQUIRE(nl.gate_count() == 1);
  CHECK(nl.gate(0).kind == GateKind::Nand);
  CHECK(nl.primary_inputs().size() == 2);
  CHECK(nl.primary_outputs().size() == 1);
}

TEST_CASE("unmapped cell is an error") {
  CHECK_THROWS_WITH_AS(parse_structural_verilog(
                           "module m (input a, output y);\n"
                           "  mystery g0 (.A(a), .Y(y));\n"
                           "endmodule\n",
                           tiny_map()),
                       doctest::Contains("unmapped cell"), ParseError);
}

TEST_CASE("hierarchy flattens with instance-path names") {
  const Netlist nl = parse_structural_verilog(
      "module leaf (input i, output o);\n"
      "  wire t;\n"
      "  inv u0 (.A(i), .Y(t));\n"
      "  inv u1 (.A(t), .Y(o));\n"
      "endmodule\n"
      "module top (input a, output y);\n"
      "  leaf b0 (.i(a), .o(y));\n"
      "endmodule\n",
      tiny_map());
  CHECK(nl.gate_count() == 2);
  CHECK(nl.find_net("b0.t").has_value());
  CHECK(nl.find_net("a").has_value());
  CHECK_FALSE(nl.find_net("b0.i").has_value());  // bound port uses the parent net
}

TEST_CASE("behavioral constructs and buses are rejected") {
  CHECK_THROWS_WITH_AS(parse_structural_verilog(
                           "module m (input a, output y);\n  assign y = a;\nendmodule\n",
                           tiny_map()),
                       doctest::Contains("behavioral construct"), ParseError);
  CHECK_THROWS_WITH_AS(parse_structural_verilog(
                           "module m (input a, output y);\n  always @(a) y = a;\nendmodule\n",
                           tiny_map()),
                       doctest::Contains("behavioral construct"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_structural_verilog("module m (input [3:0] a, output y);\nendmodule\n", tiny_map()),
      doctest::Contains("scalar"), ParseError);
}

TEST_CASE("positional connections follow the pin order") {
  const Netlist nl = parse_structural_verilog(
      "module m (input a, input b, output y);\n"
      "  nand2 g0 (a, b, y);\n"
      "endmodule\n",
      tiny_map());
  REQUIRE(nl.gate_count() == 1);
  CHECK(nl.net(nl.gate(0).inputs[0]).name == "a");
  CHECK(nl.net(nl.gate(0).inputs[1]).name == "b");
  CHECK(nl.net(nl.gate(0).output).name == "y");
}

TEST_CASE("clock pins absent from the cell map are ignored") {
  const Netlist nl = parse_structural_verilog(
      "module m (input d, input clk, output q);\n"
      "  dff r0 (.D(d), .CK(clk), .Q(q));\n"
      "endmodule\n",
      tiny_map());
  REQUIRE(nl.gate_count() == 1);
  CHECK(nl.gate(0).kind == GateKind::Dff);
  CHECK(nl.dff_count() == 1);
}

TEST_CASE("majority fixture") {
  const CellMap map = load_cell_map(fixtures::circuit_path("generic_cells.map"));
  const Netlist nl = parse_structural_verilog_file(fixtures::circuit_path("majority.v"), map);
  CHECK(nl.primary_inputs().size() == 3);
  CHECK(nl.primary_outputs().size() == 1);
  CHECK(nl.gate_count() == 6);
  CHECK(nl.dff_count() == 1);
  CHECK(nl.find_net("core.ab").has_value());
}

TEST_CASE("non-ANSI header keeps port order for inputs") {
  const Netlist nl = parse_structural_verilog(
      "module m (b, a, y);\n"
      "  input b; input a; output y;\n"
      "  nand2 g0 (.A(a), .B(b), .Y(y));\n"
      "endmodule\n",
      tiny_map());
  REQUIRE(nl.primary_inputs().size() == 2);
  CHECK(nl.net(nl.primary_inputs()[0]).name == "b");
  CHECK(nl.net(nl.primary_inputs()[1]).name == "a");
}
