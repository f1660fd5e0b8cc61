#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netfuzz/fuzz.hpp"

namespace netfuzz {

/// Per-target outcome row for targets.csv / campaign.json.
struct TargetRow {
  std::string net;
  std::optional<double> cost;
  std::string bin;  // "0", "1", "conflict", "untestable", "none"
  std::optional<std::uint64_t> first_hit0, first_hit1;
};

/// Everything a campaign leaves behind; campaign.json is the single source
/// all other report files re-derive from.
struct CampaignReport {
  std::string design;
  std::string mode;
  std::string strategy;
  std::string termination_reason;
  double goal_pct = 0.0;
  double final_coverage_pct = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t total_cycles = 0;
  std::optional<std::uint64_t> cycles_to_goal;
  std::uint64_t elapsed_wall_ms = 0;
  std::optional<std::string> last_admitted;
  std::size_t archive_size = 0;
  std::size_t queue_size = 0;
  std::size_t skipped_seeds = 0;
  std::size_t bin_count = 0;
  std::size_t n0 = 0, n1 = 0, n_conflict = 0, n_untestable = 0;
  std::map<std::string, std::string> config_echo;
  std::vector<TargetRow> targets;
  std::vector<TimelinePoint> timeline;
};

/// Campaign-independent pieces of the report assembled from a CampaignResult.
CampaignReport make_report(const Netlist& netlist, const CampaignResult& result);

std::string render_campaign_json(const CampaignReport& report);
CampaignReport parse_campaign_json(const std::string& text);
CampaignReport load_campaign_json(const std::filesystem::path& path);

std::string render_timeline_csv(const CampaignReport& report);
std::string render_targets_csv(const CampaignReport& report);

/// Human summary printed after fuzz/report runs.
std::string render_summary(const CampaignReport& report);

/// Writes campaign.json, coverage_timeline.csv and targets.csv into `dir`.
void write_report(const CampaignReport& report, const std::filesystem::path& dir);

/// Locale-independent decimal formatting used by every report writer.
std::string format_double(double value);

}  // namespace netfuzz
