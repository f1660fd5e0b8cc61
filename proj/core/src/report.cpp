#include "netfuzz/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace netfuzz {

using nlohmann::json;

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::fixed, 6);
  return std::string(buf, ptr);
}

CampaignReport make_report(const Netlist& netlist, const CampaignResult& result) {
  CampaignReport rep;
  rep.design = netlist.name();
  rep.mode = to_string(result.mode);
  rep.termination_reason = result.termination_reason;
  rep.goal_pct = result.goal;
  rep.final_coverage_pct = result.final_coverage;
  rep.iterations = result.iterations;
  rep.total_cycles = result.total_cycles;
  if (result.cycles_to_goal != kNeverHit) rep.cycles_to_goal = result.cycles_to_goal;
  rep.elapsed_wall_ms = result.elapsed_wall_ms;
  if (result.last_admitted) rep.last_admitted = seed_id_string(*result.last_admitted);
  rep.archive_size = result.archive.size();
  rep.queue_size = result.pool.size();
  rep.timeline = result.timeline;

  for (NetId net : result.targets) {
    TargetRow row;
    row.net = netlist.net(net).name;
    row.bin = "none";
    if (result.coverage.watches(net)) {
      if (result.coverage.seen0(net)) row.first_hit0 = result.coverage.first_hit0(net);
      if (result.coverage.seen1(net)) row.first_hit1 = result.coverage.first_hit1(net);
    }
    rep.targets.push_back(std::move(row));
  }
  return rep;
}

namespace {

json to_json(const CampaignReport& r) {
  json j;
  j["schema_version"] = 1;
  j["design"] = r.design;
  j["mode"] = r.mode;
  j["strategy"] = r.strategy;
  j["termination_reason"] = r.termination_reason;
  j["goal_pct"] = r.goal_pct;
  j["final_coverage_pct"] = r.final_coverage_pct;
  j["iterations"] = r.iterations;
  j["total_cycles"] = r.total_cycles;
  j["cycles_to_goal"] = r.cycles_to_goal ? json(*r.cycles_to_goal) : json(nullptr);
  j["elapsed_wall_ms"] = r.elapsed_wall_ms;
  j["last_admitted"] = r.last_admitted ? json(*r.last_admitted) : json(nullptr);
  j["counts"] = {{"targets", r.targets.size()}, {"archive", r.archive_size},
                 {"queue", r.queue_size},       {"skipped_seeds", r.skipped_seeds},
                 {"bins", r.bin_count},         {"n0", r.n0},
                 {"n1", r.n1},                  {"n_conflict", r.n_conflict},
                 {"n_untestable", r.n_untestable}};
  j["config"] = r.config_echo;

  json targets = json::array();
  for (const TargetRow& row : r.targets) {
    json t;
    t["net"] = row.net;
    t["cost"] = row.cost ? json(*row.cost) : json(nullptr);
    t["bin"] = row.bin;
    t["first_hit_0"] = row.first_hit0 ? json(*row.first_hit0) : json(nullptr);
    t["first_hit_1"] = row.first_hit1 ? json(*row.first_hit1) : json(nullptr);
    targets.push_back(std::move(t));
  }
  j["targets"] = std::move(targets);

  json timeline = json::array();
  for (const TimelinePoint& p : r.timeline)
    timeline.push_back({{"wall_ms", p.virtual_ms},
                        {"iterations", p.iterations},
                        {"cycles", p.cycles},
                        {"coverage_pct", p.coverage_pct}});
  j["timeline"] = std::move(timeline);
  return j;
}

}  // namespace

std::string render_campaign_json(const CampaignReport& report) {
  return to_json(report).dump(2) + "\n";
}

CampaignReport parse_campaign_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
    throw ParseError("campaign.json has an unsupported schema version");
  CampaignReport r;
  r.design = j.value("design", "");
  r.mode = j.value("mode", "");
  r.strategy = j.value("strategy", "");
  r.termination_reason = j.value("termination_reason", "");
  r.goal_pct = j.value("goal_pct", 0.0);
  r.final_coverage_pct = j.value("final_coverage_pct", 0.0);
  r.iterations = j.value("iterations", 0ull);
  r.total_cycles = j.value("total_cycles", 0ull);
  if (j.contains("cycles_to_goal") && !j["cycles_to_goal"].is_null())
    r.cycles_to_goal = j["cycles_to_goal"].get<std::uint64_t>();
  r.elapsed_wall_ms = j.value("elapsed_wall_ms", 0ull);
  if (j.contains("last_admitted") && !j["last_admitted"].is_null())
    r.last_admitted = j["last_admitted"].get<std::string>();
  if (j.contains("counts")) {
    const json& c = j["counts"];
    r.archive_size = c.value("archive", 0ull);
    r.queue_size = c.value("queue", 0ull);
    r.skipped_seeds = c.value("skipped_seeds", 0ull);
    r.bin_count = c.value("bins", 0ull);
    r.n0 = c.value("n0", 0ull);
    r.n1 = c.value("n1", 0ull);
    r.n_conflict = c.value("n_conflict", 0ull);
    r.n_untestable = c.value("n_untestable", 0ull);
  }
  if (j.contains("config"))
    for (const auto& [k, v] : j["config"].items())
      r.config_echo[k] = v.is_string() ? v.get<std::string>() : v.dump();
  for (const json& t : j.value("targets", json::array())) {
    TargetRow row;
    row.net = t.value("net", "");
    if (t.contains("cost") && !t["cost"].is_null()) row.cost = t["cost"].get<double>();
    row.bin = t.value("bin", "none");
    if (t.contains("first_hit_0") && !t["first_hit_0"].is_null())
      row.first_hit0 = t["first_hit_0"].get<std::uint64_t>();
    if (t.contains("first_hit_1") && !t["first_hit_1"].is_null())
      row.first_hit1 = t["first_hit_1"].get<std::uint64_t>();
    r.targets.push_back(std::move(row));
  }
  for (const json& p : j.value("timeline", json::array())) {
    TimelinePoint tp;
    tp.virtual_ms = p.value("wall_ms", 0ull);
    tp.iterations = p.value("iterations", 0ull);
    tp.cycles = p.value("cycles", 0ull);
    tp.coverage_pct = p.value("coverage_pct", 0.0);
    r.timeline.push_back(tp);
  }
  return r;
}

CampaignReport load_campaign_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_campaign_json(buf.str());
}

std::string render_timeline_csv(const CampaignReport& report) {
  std::string out = "wall_ms,iterations,cycles,coverage_pct\n";
  for (const TimelinePoint& p : report.timeline) {
    out += std::to_string(p.virtual_ms);
    out += ',';
    out += std::to_string(p.iterations);
    out += ',';
    out += std::to_string(p.cycles);
    out += ',';
    out += format_double(p.coverage_pct);
    out += '\n';
  }
  return out;
}

std::string render_targets_csv(const CampaignReport& report) {
  std::string out = "net,cost,bin,first_hit_0,first_hit_1\n";
  for (const TargetRow& row : report.targets) {
    out += row.net;
    out += ',';
    if (row.cost) out += format_double(*row.cost);
    out += ',';
    out += row.bin;
    out += ',';
    if (row.first_hit0) out += std::to_string(*row.first_hit0);
    out += ',';
    if (row.first_hit1) out += std::to_string(*row.first_hit1);
    out += '\n';
  }
  return out;
}

std::string render_summary(const CampaignReport& report) {
  std::ostringstream out;
  out << "design            : " << report.design << "\n"
      << "mode              : " << report.mode << "\n"
      << "strategy          : " << report.strategy << "\n"
      << "targets           : " << report.targets.size() << "\n"
      << "bins (N0/N1/NC)   : " << report.bin_count << " (" << report.n0 << "/" << report.n1
      << "/" << report.n_conflict << ")\n"
      << "untestable        : " << report.n_untestable << "\n"
      << "coverage          : " << format_double(report.final_coverage_pct) << "% (goal "
      << format_double(report.goal_pct) << "%)\n"
      << "termination       : " << report.termination_reason << "\n"
      << "iterations        : " << report.iterations << "\n"
      << "simulated cycles  : " << report.total_cycles << "\n";
  if (report.cycles_to_goal)
    out << "cycles to goal    : " << *report.cycles_to_goal << "\n";
  out << "wall time (ms)    : " << report.elapsed_wall_ms << "\n"
      << "archive / queue   : " << report.archive_size << " / " << report.queue_size << "\n";
  if (report.last_admitted) out << "last admitted     : " << *report.last_admitted << "\n";
  return out.str();
}

void write_report(const CampaignReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write report file '" + (dir / name).string() + "'");
    out << text;
  };
  write("campaign.json", render_campaign_json(report));
  write("coverage_timeline.csv", render_timeline_csv(report));
  write("targets.csv", render_targets_csv(report));
}

}  // namespace netfuzz
