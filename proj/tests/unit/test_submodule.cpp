#include <doctest.h>

#include <random>
#include <set>

#include "netfuzz/bench.hpp"
#include "netfuzz/rng.hpp"
#include "netfuzz/simulator.hpp"
#include "netfuzz/submodule.hpp"
#include "netfuzz/verilog.hpp"
#include "support/cube_oracle.hpp"
#include "support/fixtures.hpp"

using namespace netfuzz;

TEST_CASE("single-gate extraction") {
  const Netlist nl = parse_bench("INPUT(a)\nOUTPUT(y)\ny = NOT(a)");
  const SubNetlist sub = extract_submodule(nl, std::array{nl.net_by_name("y")});
  CHECK(sub.netlist.gate_count() == 1);
  REQUIRE(sub.boundary.size() == 1);
  CHECK(sub.netlist.net(sub.boundary[0].first).name == "a");
  CHECK(nl.net(sub.boundary[0].second).name == "a");
  CHECK(sub.sub_target_count() == 1);
  CHECK(sub.main_boundary_count() == 1);
}

TEST_CASE("flip-flop outputs truncate the cone") {
  const Netlist nl = parse_bench(
      "INPUT(d)\nOUTPUT(y)\nq = DFF(d)\ny = NOT(q)");
  const SubNetlist sub = extract_submodule(nl, std::array{nl.net_by_name("y")});
  CHECK(sub.netlist.gate_count() == 1);  // the NOT only; DFF excluded
  CHECK(sub.netlist.dff_count() == 0);
  REQUIRE(sub.boundary.size() == 1);
  CHECK(nl.net(sub.boundary[0].second).name == "q");
  CHECK(sub.netlist.is_primary_input(sub.boundary[0].first));
}

TEST_CASE("co-simulation fidelity on a mid-size design") {
  const Netlist nl = fixtures::c432_scale();
  std::mt19937_64 pick(10);
  std::vector<NetId> targets;
  std::set<NetId> used;
  while (targets.size() < 10) {
    const NetId id = static_cast<NetId>(rng_below(pick, nl.net_count()));
    if (!nl.is_const_driven(id) && used.insert(id).second) targets.push_back(id);
  }
  const SubNetlist sub = extract_submodule(nl, targets);

  Simulator full(nl);
  Simulator part(sub.netlist);
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    InputVector bits(nl.primary_inputs().size());
    for (auto& b : bits) b = rng_bit(rng) ? 1 : 0;
    full.step(bits);

    InputVector sub_bits(sub.netlist.primary_inputs().size());
    for (std::size_t i = 0; i < sub.boundary.size(); ++i) {
      const auto [sub_pi, main_net] = sub.boundary[i];
      // boundary order equals sub PI order by construction
      REQUIRE(sub.netlist.primary_inputs()[i] == sub_pi);
      sub_bits[i] = full.value(main_net) == Tri::T ? 1 : 0;
    }
    part.step(sub_bits);
    for (const auto& [sub_net, main_net] : sub.target_map)
      CHECK(part.value(sub_net) == full.value(main_net));
  }
}

TEST_CASE("sequential slice fidelity on s27") {
  const Netlist nl = fixtures::s27();
  std::vector<NetId> targets{nl.net_by_name("G9"), nl.net_by_name("G17"),
                             nl.net_by_name("G15")};
  const SubNetlist sub = extract_submodule(nl, targets);
  CHECK(sub.netlist.dff_count() == 0);

  Simulator full(nl);
  Simulator part(sub.netlist);
  std::mt19937_64 rng(12);
  for (int cycle = 0; cycle < 50; ++cycle) {
    InputVector bits(4);
    for (auto& b : bits) b = rng_bit(rng) ? 1 : 0;
    full.step(bits);
    InputVector sub_bits(sub.boundary.size());
    bool any_x = false;
    for (std::size_t i = 0; i < sub.boundary.size(); ++i) {
      const Tri v = full.value(sub.boundary[i].second);
      if (v == Tri::X) any_x = true;
      sub_bits[i] = v == Tri::T ? 1 : 0;
    }
    if (any_x) continue;  // binary boundary slices only
    part.step(sub_bits);
    for (const auto& [sub_net, main_net] : sub.target_map)
      CHECK(part.value(sub_net) == full.value(main_net));
  }
}

TEST_CASE("boundary map sidecar") {
  const Netlist nl = parse_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)");
  const SubNetlist sub = extract_submodule(nl, std::array{nl.net_by_name("y")});
  CHECK(write_boundary_map(nl, sub) == "a a\nb b\n");
}

TEST_CASE("submodule pattern generation with PI boundaries is the identity path") {
  const Netlist nl = fixtures::c17();
  std::vector<NetId> targets{nl.net_by_name("22"), nl.net_by_name("23"),
                             nl.net_by_name("16")};
  const SubNetlist sub = extract_submodule(nl, targets);
  const SubmodulePatterns sp = pattern_generation_submodule(nl, sub, false);

  std::size_t members = sp.n0.size() + sp.n1.size();
  CHECK(members + sp.conflicted.size() == targets.size());
  for (const MergedPattern& bin : sp.bins) {
    for (const auto& [net, value] : bin.cube.literals()) CHECK(nl.is_controllable(net));
    for (NetId n : bin.members0) CHECK(oracle::forces_exhaustive(nl, bin.cube, n, false));
    for (NetId n : bin.members1) CHECK(oracle::forces_exhaustive(nl, bin.cube, n, true));
  }
  // conflicted targets appear in no member set
  for (NetId n : sp.conflicted) {
    for (const MergedPattern& bin : sp.bins) {
      CHECK(std::find(bin.members0.begin(), bin.members0.end(), n) == bin.members0.end());
      CHECK(std::find(bin.members1.begin(), bin.members1.end(), n) == bin.members1.end());
    }
  }
}

TEST_CASE("submodule patterns activate on the full design") {
  const Netlist nl = fixtures::c432_scale();
  std::mt19937_64 pick(20);
  std::vector<NetId> targets;
  std::set<NetId> used;
  while (targets.size() < 10) {
    const NetId id = static_cast<NetId>(rng_below(pick, nl.net_count()));
    if (!nl.is_const_driven(id) && used.insert(id).second) targets.push_back(id);
  }
  const SubNetlist sub = extract_submodule(nl, targets);
  const SubmodulePatterns sp = pattern_generation_submodule(nl, sub, true);
  for (const MergedPattern& bin : sp.bins) {
    for (NetId n : bin.members0)
      CHECK(oracle::forces_sampled(nl, bin.cube, n, false, 60, 77 + n));
    for (NetId n : bin.members1)
      CHECK(oracle::forces_sampled(nl, bin.cube, n, true, 60, 99 + n));
  }
}

TEST_CASE("boundary requirements on internal nets are justified on the main design") {
  // Hand-built subnetlist whose boundary lands on an internal main net, the
  // general case of the back-justification rule.
  const Netlist main = parse_bench(
      "INPUT(a)\nINPUT(b)\nOUTPUT(y)\nm = AND(a, b)\ny = NOT(m)");
  NetlistBuilder builder("slice");
  const NetId sub_m = builder.add_net("m");
  builder.mark_input(sub_m);
  const NetId sub_y = builder.add_net("y");
  builder.add_gate(GateKind::Not, sub_y, {sub_m});
  builder.mark_output(sub_y);

  SubNetlist sub;
  sub.netlist = builder.finish();
  sub.boundary = {{sub_m, main.net_by_name("m")}};
  sub.target_map = {{sub_y, main.net_by_name("y")}};

  const SubmodulePatterns sp = pattern_generation_submodule(main, sub, false);
  REQUIRE(sp.conflicted.empty());
  REQUIRE(!sp.bins.empty());
  // the bin's cube now pins main-design inputs, not the internal boundary
  for (const auto& [net, value] : sp.bins[0].cube.literals())
    CHECK(main.is_controllable(net));
  for (NetId n : sp.bins[0].members0)
    CHECK(oracle::forces_exhaustive(main, sp.bins[0].cube, n, false));
  for (NetId n : sp.bins[0].members1)
    CHECK(oracle::forces_exhaustive(main, sp.bins[0].cube, n, true));
}

TEST_CASE("unjustifiable boundary requirements drop their dependent targets") {
  // The sub-level pattern for y = 1 pins both boundary nets to 1, and `stuck`
  // is structurally 0 in the main design, so back-justification must drop y.
  const Netlist main = parse_bench(
      "INPUT(a)\nINPUT(c)\nOUTPUT(y)\nn = NOT(a)\nstuck = AND(a, n)\ny = AND(stuck, c)");
  NetlistBuilder builder("slice");
  const NetId sub_stuck = builder.add_net("stuck");
  builder.mark_input(sub_stuck);
  const NetId sub_c = builder.add_net("c");
  builder.mark_input(sub_c);
  const NetId sub_y = builder.add_net("y");
  builder.add_gate(GateKind::And, sub_y, {sub_stuck, sub_c});
  builder.mark_output(sub_y);

  SubNetlist sub;
  sub.netlist = builder.finish();
  sub.boundary = {{sub_stuck, main.net_by_name("stuck")}, {sub_c, main.net_by_name("c")}};
  sub.target_map = {{sub_y, main.net_by_name("y")}};

  const SubmodulePatterns sp = pattern_generation_submodule(main, sub, false);
  // the rarer polarity (y = 1, two pinned inputs) merges first, then fails
  const NetId y = main.net_by_name("y");
  CHECK(std::find(sp.conflicted.begin(), sp.conflicted.end(), y) != sp.conflicted.end());
  for (const MergedPattern& bin : sp.bins) {
    CHECK(std::find(bin.members1.begin(), bin.members1.end(), y) == bin.members1.end());
    CHECK(std::find(bin.members0.begin(), bin.members0.end(), y) == bin.members0.end());
  }
}

TEST_CASE("monitor emission") {
  const Netlist nl = parse_bench("INPUT(a)\nOUTPUT(y)\nOUTPUT(z)\ny = NOT(a)\nz = BUF(a)");
  SUBCASE("ordered ports and reparse round trip") {
    TargetSet t;
    t.members = {nl.net_by_name("y"), nl.net_by_name("z")};
    t.costs = {0.4, 0.9};
    t.strategy = Strategy::CostThreshold;
    const std::string text = emit_monitor(nl, t);
    CHECK(text.find("input z") < text.find("input y"));  // descending cost

    const Netlist shell = parse_structural_verilog(text, CellMap{});
    REQUIRE(shell.primary_inputs().size() == 2);
    CHECK(shell.net(shell.primary_inputs()[0]).name == "z");
    CHECK(shell.net(shell.primary_inputs()[1]).name == "y");
    CHECK(shell.gate_count() == 0);
  }
  SUBCASE("collision detection") {
    const Netlist hier = parse_bench("INPUT(x)\nOUTPUT(a.b)\nOUTPUT(a_b)\n"
                                     "a.b = NOT(x)\na_b = BUF(x)");
    TargetSet t;
    t.members = {hier.net_by_name("a.b"), hier.net_by_name("a_b")};
    CHECK_THROWS_WITH_AS(emit_monitor(hier, t), doctest::Contains("collide"), ParseError);
  }
  SUBCASE("no targets") {
    CHECK_THROWS_AS(emit_monitor(nl, TargetSet{}), ConfigError);
  }
}
