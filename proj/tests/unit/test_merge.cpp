#include <doctest.h>

#include <random>
#include <set>

#include "netfuzz/atpg.hpp"
#include "netfuzz/bench.hpp"
#include "netfuzz/merge.hpp"
#include "netfuzz/rng.hpp"
#include "support/cube_oracle.hpp"
#include "support/fixtures.hpp"

using namespace netfuzz;

namespace {

Cube make_cube(std::initializer_list<std::pair<NetId, bool>> lits) {
  Cube c;
  for (const auto& [net, value] : lits) c.set(net, value);
  return c;
}

ActivationPatterns::Entry entry1(NetId net, Cube cube) {
  ActivationPatterns::Entry e;
  e.net = net;
  e.cube1 = std::move(cube);
  e.outcome1 = AtpgOutcome::Satisfied;
  return e;
}

}  // namespace

TEST_CASE("cube basics") {
  CHECK(cubes_conflict(make_cube({{0, true}}), make_cube({{0, false}})));
  CHECK_FALSE(cubes_conflict(make_cube({{0, true}}), make_cube({{1, false}})));
  CHECK(cube_subsumes(make_cube({{0, true}, {1, false}}), make_cube({{1, false}})));
  CHECK_FALSE(cube_subsumes(make_cube({{0, true}}), make_cube({{1, false}})));
  const Cube u = cube_union(make_cube({{0, true}}), make_cube({{1, false}}));
  CHECK(u.size() == 2);
}

TEST_CASE("pairwise c17 activation cubes: compatibility implies joint activation") {
  const Netlist nl = fixtures::c17();
  std::vector<NetId> internal;
  for (NetId id = 0; id < nl.net_count(); ++id)
    if (!nl.is_primary_input(id)) internal.push_back(id);

  for (NetId a : internal)
    for (NetId b : internal) {
      if (a >= b) continue;
      for (bool va : {false, true})
        for (bool vb : {false, true}) {
          const AtpgResult ra = justify(nl, {a, va});
          const AtpgResult rb = justify(nl, {b, vb});
          REQUIRE(ra.outcome == AtpgOutcome::Satisfied);
          REQUIRE(rb.outcome == AtpgOutcome::Satisfied);
          if (!cubes_conflict(ra.cube, rb.cube)) {
            const Cube joint = cube_union(ra.cube, rb.cube);
            CHECK(oracle::forces_exhaustive(nl, joint, a, va));
            CHECK(oracle::forces_exhaustive(nl, joint, b, vb));
          }
        }
    }
}

TEST_CASE("merge of disjoint-support cubes lands in one bin") {
  ActivationPatterns pats;
  ActivationPatterns::Entry ea;
  ea.net = 10;
  ea.cube1 = make_cube({{0, true}});
  ea.outcome1 = AtpgOutcome::Satisfied;
  ActivationPatterns::Entry eb;
  eb.net = 11;
  eb.cube0 = make_cube({{1, false}});
  eb.outcome0 = AtpgOutcome::Satisfied;
  pats.entries = {ea, eb};

  const Netlist nl = parse_bench(
      "INPUT(a)\nINPUT(b)\nOUTPUT(x)\nOUTPUT(y)\n"
      "c = BUF(a)\nd = BUF(b)\ne = BUF(a)\nf = BUF(b)\ng = BUF(a)\nh = BUF(b)\n"
      "i = BUF(a)\nj = BUF(b)\nk = BUF(a)\nx = BUF(a)\ny = BUF(b)\n");
  const MergeResult r = merge_pattern(nl, pats);
  CHECK(r.primary.cube.size() == 2);
  CHECK(r.primary.members1 == std::vector<NetId>{10});
  CHECK(r.primary.members0 == std::vector<NetId>{11});
  CHECK(r.primary.conflicts.empty());
  CHECK(r.overflow.empty());
}

TEST_CASE("conflicting single-polarity entries: second goes to N_C or an overflow bin") {
  const Netlist nl = parse_bench("INPUT(a)\nOUTPUT(x)\nOUTPUT(y)\nx = BUF(a)\ny = NOT(a)");
  const NetId a = nl.net_by_name("a");
  ActivationPatterns pats;
  pats.entries = {entry1(nl.net_by_name("x"), make_cube({{a, true}})),
                  entry1(nl.net_by_name("y"), make_cube({{a, false}}))};

  const MergeResult single = merge_pattern(nl, pats, false);
  CHECK(single.primary.members1.size() == 1);
  CHECK(single.primary.conflicts.size() == 1);

  const MergeResult multi = merge_pattern(nl, pats, true);
  CHECK(multi.primary.conflicts.empty());
  REQUIRE(multi.overflow.size() == 1);
  CHECK(multi.overflow[0].members1.size() == 1);
}

TEST_CASE("merge order prefers fewer specified bits and the merged cube stays small") {
  const Netlist nl = fixtures::c432_scale();
  std::mt19937_64 pick(3);
  std::vector<NetId> targets;
  while (targets.size() < 20) {
    const NetId id = static_cast<NetId>(rng_below(pick, nl.net_count()));
    if (!nl.is_const_driven(id)) targets.push_back(id);
  }
  const auto pats = gen_activation_patterns(nl, targets);
  const MergeResult r = merge_pattern(nl, pats);

  std::size_t member_lits = 0;
  std::unordered_map<NetId, const ActivationPatterns::Entry*> entry_of;
  for (const auto& e : pats.entries) entry_of.emplace(e.net, &e);
  for (NetId n : r.primary.members0) {
    CHECK(cube_subsumes(r.primary.cube, *entry_of.at(n)->cube0));
    member_lits += entry_of.at(n)->cube0->size();
  }
  for (NetId n : r.primary.members1) {
    CHECK(cube_subsumes(r.primary.cube, *entry_of.at(n)->cube1));
    member_lits += entry_of.at(n)->cube1->size();
  }
  CHECK(r.primary.cube.size() <= member_lits);  // sharing never adds literals
}

TEST_CASE("merged bins on mid-size selections: conflict-free, subsumed, activating") {
  const Netlist nl = fixtures::c432_scale();
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    std::mt19937_64 pick(seed);
    std::vector<NetId> targets;
    std::set<NetId> used;
    while (targets.size() < 20) {
      const NetId id = static_cast<NetId>(rng_below(pick, nl.net_count()));
      if (!nl.is_const_driven(id) && used.insert(id).second) targets.push_back(id);
    }
    const auto pats = gen_activation_patterns(nl, targets);
    std::unordered_map<NetId, const ActivationPatterns::Entry*> entry_of;
    for (const auto& e : pats.entries) entry_of.emplace(e.net, &e);

    for (bool multi : {false, true}) {
      const MergeResult r = merge_pattern(nl, pats, multi);
      std::vector<const MergedPattern*> bins{&r.primary};
      for (const auto& b : r.overflow) bins.push_back(&b);

      std::size_t placed = 0;
      for (const MergedPattern* bin : bins) {
        // members' chosen-polarity cubes pairwise compatible and subsumed
        for (NetId n : bin->members0) {
          CHECK(cube_subsumes(bin->cube, *entry_of.at(n)->cube0));
          CHECK(oracle::forces_sampled(nl, bin->cube, n, false, 40, seed * 7 + n));
        }
        for (NetId n : bin->members1) {
          CHECK(cube_subsumes(bin->cube, *entry_of.at(n)->cube1));
          CHECK(oracle::forces_sampled(nl, bin->cube, n, true, 40, seed * 9 + n));
        }
        // disjoint member polarity sets within a bin
        std::set<NetId> m0(bin->members0.begin(), bin->members0.end());
        for (NetId n : bin->members1) CHECK(m0.count(n) == 0);
        placed += bin->members0.size() + bin->members1.size();
      }
      // multi-bin places a superset of the single-bin member set
      if (multi) {
        CHECK(r.primary.conflicts.empty());
        CHECK(placed == targets.size() - pats.untestable.size());
      } else {
        CHECK(placed + r.primary.conflicts.size() ==
              targets.size() - pats.untestable.size());
      }
      // conflicts never overlap members
      for (NetId n : r.primary.conflicts) {
        for (const MergedPattern* bin : bins) {
          CHECK(std::find(bin->members0.begin(), bin->members0.end(), n) ==
                bin->members0.end());
          CHECK(std::find(bin->members1.begin(), bin->members1.end(), n) ==
                bin->members1.end());
        }
      }
    }
  }
}

TEST_CASE("seed instantiation") {
  const Netlist nl = parse_bench("INPUT(a)\nINPUT(b)\nINPUT(c)\nOUTPUT(y)\ny = AND(a, b)");
  const NetId a = nl.net_by_name("a");
  MergedPattern bin;
  bin.cube = make_cube({{a, true}});
  bin.members1 = {nl.net_by_name("y")};

  SUBCASE("single cycle, zero fill") {
    const SeedPattern s = instantiate_seed(nl, bin, 1, FillPolicy::Zeros, 1);
    REQUIRE(s.vectors.size() == 1);
    CHECK(s.vectors[0] == InputVector{1, 0, 0});
  }
  SUBCASE("random fill keeps the specified bit") {
    const SeedPattern s1 = instantiate_seed(nl, bin, 4, FillPolicy::Random, 1);
    const SeedPattern s2 = instantiate_seed(nl, bin, 4, FillPolicy::Random, 2);
    CHECK(s1.vectors[0][0] == 1);
    CHECK(s2.vectors[0][0] == 1);
    CHECK(s1.vectors != s2.vectors);  // overwhelmingly likely with 11 free bits
    const SeedPattern s1_again = instantiate_seed(nl, bin, 4, FillPolicy::Random, 1);
    CHECK(s1.vectors == s1_again.vectors);
  }
  SUBCASE("reset prologue") {
    const ResetSpec reset{"c", true, 2};
    const SeedPattern s = instantiate_seed(nl, bin, 4, FillPolicy::Zeros, 1, reset);
    REQUIRE(s.vectors.size() == 4);
    CHECK(s.vectors[0][2] == 1);  // reset held active
    CHECK(s.vectors[1][2] == 1);
    CHECK(s.vectors[2][2] == 0);  // released
    CHECK(s.vectors[2][0] == 1);  // activation carries the cube bit
    CHECK_THROWS_AS(instantiate_seed(nl, bin, 2, FillPolicy::Zeros, 1, reset), ConfigError);
  }
  SUBCASE("reset must be a primary input") {
    const ResetSpec reset{"y", true, 1};
    CHECK_THROWS_AS(instantiate_seed(nl, bin, 4, FillPolicy::Zeros, 1, reset), ConfigError);
  }
}

TEST_CASE("pseudo-input literals get a warm-up prefix") {
  const Netlist nl = fixtures::s27();
  const NetId g5 = nl.net_by_name("G5");
  MergedPattern bin;
  bin.cube = make_cube({{g5, true}, {nl.net_by_name("G0"), true}});
  bin.members1 = {nl.net_by_name("G9")};
  const SeedPattern s = instantiate_seed(nl, bin, 8, FillPolicy::Zeros, 3);
  REQUIRE(s.vectors.size() == 8);
  // activation sits after the warm-up: the G0 bit appears at cycle 4
  CHECK(s.vectors[4][0] == 1);
  bool warmup_nonzero = false;
  for (int c = 0; c < 4; ++c)
    for (std::uint8_t bit : s.vectors[c]) warmup_nonzero |= bit != 0;
  CHECK(warmup_nonzero);  // zeros fill would leave these all-zero without warm-up
}

TEST_CASE("instantiated c17 bin activates every member") {
  const Netlist nl = fixtures::c17();
  std::vector<NetId> internal;
  for (NetId id = 0; id < nl.net_count(); ++id)
    if (!nl.is_primary_input(id)) internal.push_back(id);
  const auto pats = gen_activation_patterns(nl, internal);
  const MergeResult r = merge_pattern(nl, pats);
  const SeedPattern seed = instantiate_seed(nl, r.primary, 1, FillPolicy::Zeros, 1);

  Simulator sim(nl);
  sim.step(seed.vectors[0]);
  for (NetId n : r.primary.members0) CHECK(sim.value(n) == Tri::F);
  for (NetId n : r.primary.members1) CHECK(sim.value(n) == Tri::T);
}

TEST_CASE("empty pattern set is an error") {
  const Netlist nl = fixtures::c17();
  CHECK_THROWS_AS(merge_pattern(nl, ActivationPatterns{}), ConfigError);
}
