#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "netfuzz/bench.hpp"
#include "netfuzz/pipeline.hpp"
#include "netfuzz/report.hpp"
#include "netfuzz/rng.hpp"
#include "netfuzz/seed_io.hpp"
#include "support/fixtures.hpp"

using namespace netfuzz;

namespace {

std::filesystem::path fresh_dir(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() / (std::string("netfuzz_") + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("seed text round trip") {
  SeedVectors v{{1, 0, 1}, {0, 0, 0}, {1, 1, 1}};
  const std::string text = write_seed_text(v);
  CHECK(text == "PIW=3 CYC=3 SEEDFMT=1\n101\n000\n111\n");
  CHECK(parse_seed_text(text) == v);
}

TEST_CASE("malformed seed files") {
  CHECK_THROWS_AS(parse_seed_text(""), ParseError);
  CHECK_THROWS_AS(parse_seed_text("PIW=3 CYC=1 SEEDFMT=2\n101\n"), ParseError);
  CHECK_THROWS_AS(parse_seed_text("PIW=3 CYC=1 SEEDFMT=1\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_seed_text("PIW=3 CYC=2 SEEDFMT=1\n101\n"), ParseError);
  CHECK_THROWS_AS(parse_seed_text("PIW=3 CYC=1 SEEDFMT=1\n1a1\n"), ParseError);
  CHECK_THROWS_AS(parse_seed_text("WIDTH=3\n101\n"), ParseError);
}

TEST_CASE("corpus save and load") {
  const auto dir = fresh_dir("corpus");
  CorpusPaths paths{dir};

  std::vector<Seed> queue;
  for (int i = 0; i < 3; ++i)
    queue.push_back(Seed::from_vectors(
        SeedVectors{{std::uint8_t(i & 1), std::uint8_t((i >> 1) & 1), 0}}));
  std::vector<Seed> archive{queue[0]};
  save_corpus(paths, queue, archive);

  const CorpusLoad load = load_corpus(paths, 3);
  CHECK(load.queue.size() == 3);
  CHECK(load.archive.size() == 1);
  CHECK(load.skipped == 0);
  std::set<std::uint64_t> want, got;
  for (const Seed& s : queue) want.insert(s.id);
  for (const Seed& s : load.queue) got.insert(s.id);
  CHECK(want == got);

  SUBCASE("width mismatches and junk are skipped with a count") {
    {
      std::ofstream bad(paths.queue() / "bad.seed");
      bad << "PIW=2 CYC=1 SEEDFMT=1\n10\n";
      std::ofstream junk(paths.queue() / "README");
      junk << "not a seed\n";
    }
    const CorpusLoad reload = load_corpus(paths, 3);
    CHECK(reload.queue.size() == 3);
    CHECK(reload.skipped == 1);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("large corpus round trip is hash stable") {
  const auto dir = fresh_dir("corpus1k");
  CorpusPaths paths{dir};
  std::mt19937_64 rng(404);
  std::vector<Seed> queue;
  std::set<std::uint64_t> ids;
  while (queue.size() < 1000) {
    SeedVectors v(1 + rng_below(rng, 4), InputVector(17));
    for (auto& row : v)
      for (auto& bit : row) bit = rng_bit(rng) ? 1 : 0;
    Seed s = Seed::from_vectors(std::move(v));
    if (ids.insert(s.id).second) queue.push_back(std::move(s));
  }
  save_corpus(paths, queue, {});
  const CorpusLoad load = load_corpus(paths, 17);
  REQUIRE(load.queue.size() == 1000);
  std::set<std::uint64_t> got;
  for (const Seed& s : load.queue) got.insert(s.id);
  CHECK(got == ids);
  std::filesystem::remove_all(dir);
}

TEST_CASE("missing files are configuration errors") {
  CHECK_THROWS_AS(load_seed_file("/nonexistent/x.seed"), ConfigError);
  CHECK_THROWS_AS(load_campaign_json("/nonexistent/campaign.json"), ConfigError);
  CHECK_THROWS_AS(parse_bench_file("/nonexistent/x.bench"), ConfigError);
}

TEST_CASE("campaign json round trip") {
  CampaignReport r;
  r.design = "c17";
  r.mode = "directed";
  r.strategy = "manual";
  r.termination_reason = "coverage_goal";
  r.goal_pct = 90.0;
  r.final_coverage_pct = 100.0;
  r.iterations = 12;
  r.total_cycles = 96;
  r.cycles_to_goal = 42;
  r.last_admitted = "00000000deadbeef";
  r.archive_size = 3;
  r.queue_size = 4;
  r.bin_count = 1;
  r.n0 = 1;
  r.n1 = 1;
  r.config_echo = {{"goal", "90.000000"}, {"rng_seed", "1"}};
  r.targets = {TargetRow{"22", 0.5, "0", 3, 9}, TargetRow{"23", std::nullopt, "untestable",
                                                          std::nullopt, std::nullopt}};
  r.timeline = {TimelinePoint{0, 0, 0, 0.0}, TimelinePoint{96, 12, 96, 100.0}};

  const std::string text = render_campaign_json(r);
  const CampaignReport back = parse_campaign_json(text);
  CHECK(render_campaign_json(back) == text);
  CHECK(back.targets.size() == 2);
  CHECK(back.targets[0].cost == doctest::Approx(0.5));
  CHECK_FALSE(back.targets[1].cost.has_value());
  CHECK(back.timeline.size() == 2);
  CHECK(back.cycles_to_goal == 42);
}

TEST_CASE("empty campaign renders valid files") {
  CampaignReport r;
  r.design = "none";
  r.mode = "random";
  r.termination_reason = "time_budget";
  const std::string json_text = render_campaign_json(r);
  CHECK_NOTHROW(parse_campaign_json(json_text));
  CHECK(render_timeline_csv(r) == "wall_ms,iterations,cycles,coverage_pct\n");
  CHECK(render_targets_csv(r) == "net,cost,bin,first_hit_0,first_hit_1\n");
}

TEST_CASE("locale-independent numeric formatting") {
  CHECK(format_double(90.5) == "90.500000");
  CHECK(format_double(0.0) == "0.000000");
  CHECK(format_double(100.0) == "100.000000");
}

TEST_CASE("pipeline report: rows equal the post-merge target set and CSVs re-derive") {
  const Netlist nl = fixtures::c17();
  PipelineOptions opt;
  opt.selection.strategy = Strategy::Manual;
  opt.selection.manual_names = {"10", "11", "16", "19", "22", "23"};
  opt.campaign.max_iterations = 500;
  opt.campaign.coverage_goal = 100.0;
  const PipelineRun run = run_pipeline(nl, opt);

  CHECK(run.report.targets.size() == run.patterns.final_targets.size());
  for (const TargetRow& row : run.report.targets) CHECK(row.bin != "conflict");

  const auto dir = fresh_dir("report");
  write_report(run.report, dir);
  const CampaignReport loaded = load_campaign_json(dir / "campaign.json");
  // the report subcommand re-renders CSVs from campaign.json alone
  std::ifstream tl(dir / "coverage_timeline.csv"), tg(dir / "targets.csv");
  std::stringstream tl_text, tg_text;
  tl_text << tl.rdbuf();
  tg_text << tg.rdbuf();
  CHECK(render_timeline_csv(loaded) == tl_text.str());
  CHECK(render_targets_csv(loaded) == tg_text.str());
  std::filesystem::remove_all(dir);
}
