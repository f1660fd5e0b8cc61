#include "netfuzz/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_set>

#include "netfuzz/log.hpp"
#include "netfuzz/rng.hpp"

namespace netfuzz {

const char* to_string(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::Directed: return "directed";
    case FuzzMode::Random: return "random";
    case FuzzMode::Cgf: return "cgf";
  }
  return "?";
}

std::optional<FuzzMode> fuzz_mode_from(std::string_view text) {
  if (text == "directed") return FuzzMode::Directed;
  if (text == "random") return FuzzMode::Random;
  if (text == "cgf") return FuzzMode::Cgf;
  return std::nullopt;
}

void CampaignConfig::validate() const {
  if (coverage_goal <= 0.0 || coverage_goal > 100.0)
    throw ConfigError("coverage goal must be in (0,100]");
  if (!time_budget_ms && !max_iterations)
    throw ConfigError("campaign needs a time budget or an iteration bound");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (seed_cycles < 1) throw ConfigError("seed_cycles must be >= 1");
  if (mutation.max_cycles < 1) throw ConfigError("max_cycles must be >= 1");
}

namespace {

using Clock = std::chrono::steady_clock;

struct TaskResult {
  SeedVectors vectors;
  CoverageMap local;  // flags with run-local cycle numbers
  std::uint64_t cycles = 0;
  std::uint64_t parent_id = 0;
};

class Campaign {
public:
  Campaign(const Netlist& netlist, std::span<const NetId> targets,
           const CampaignConfig& config)
      : netlist_(netlist),
        config_(config),
        targets_(targets.begin(), targets.end()) {
    config_.validate();
    if (targets_.empty()) throw ConfigError("campaign with no target nets");

    std::vector<NetId> monitor;
    if (config_.mode == FuzzMode::Cgf) {
      for (NetId id = 0; id < netlist.net_count(); ++id)
        if (!netlist.is_const_driven(id)) monitor.push_back(id);
    } else {
      monitor = targets_;
    }
    coverage_ = CoverageMap(netlist, monitor);
    monitor_ = std::move(monitor);
  }

  CampaignResult run(const std::vector<SeedPattern>& initial_patterns) {
    start_ = Clock::now();
    push_timeline();

    std::vector<Seed> initial;
    if (config_.mode == FuzzMode::Directed) {
      for (const SeedPattern& p : initial_patterns)
        initial.push_back(Seed::from_vectors(p.vectors));
      if (initial.empty()) throw ConfigError("directed campaign with no initial seeds");
    } else {
      std::mt19937_64 rng(config_.rng_seed);
      const std::size_t width = netlist_.primary_inputs().size();
      for (std::uint32_t i = 0; i < config_.baseline_seed_count; ++i)
        initial.push_back(Seed::from_vectors(random_vectors(rng, width)));
    }

    for (Seed& s : initial) {
      if (!ids_.insert(s.id).second) continue;  // dedup identical stimuli
      pool_.push_back(std::move(s));
    }

    // Seeding phase: the initial pool runs un-mutated under the same
    // retention rule, so a pattern that already covers everything is admitted
    // and ends the campaign in one round.
    for (std::size_t i = 0; i < pool_.size() && !terminated(); ++i) {
      TaskResult r = simulate(pool_[i].vectors, pool_[i].id);
      consider(std::move(r), /*from_pool=*/true, i);
    }

    while (!terminated()) {
      const std::size_t batch = pool_.size();
      const std::uint64_t base_index = iterations_;
      std::vector<TaskResult> results(batch);

      const std::uint32_t n_workers =
          std::min<std::uint32_t>(config_.workers, static_cast<std::uint32_t>(batch));
      if (n_workers <= 1) {
        bool stop = false;
        for (std::size_t t = 0; t < batch && !stop; ++t) {
          results[t] = make_mutant(t, base_index + t);
          consider(std::move(results[t]), false, t);
          stop = terminated();
        }
        continue;  // termination re-checked by the loop condition
      }

      // Workers build mutants and simulate privately; admission happens
      // afterwards in task order, so results do not depend on thread timing.
      std::vector<std::thread> threads;
      threads.reserve(n_workers);
      for (std::uint32_t w = 0; w < n_workers; ++w) {
        threads.emplace_back([&, w]() {
          for (std::size_t t = w; t < batch; t += n_workers)
            results[t] = make_mutant(t, base_index + t);
        });
      }
      for (std::thread& th : threads) th.join();
      for (std::size_t t = 0; t < batch && !terminated(); ++t)
        consider(std::move(results[t]), false, t);
    }

    return finalize();
  }

private:
  SeedVectors random_vectors(std::mt19937_64& rng, std::size_t width) const {
    SeedVectors v(config_.seed_cycles, InputVector(width));
    for (InputVector& row : v)
      for (std::uint8_t& bit : row) bit = rng_bit(rng) ? 1 : 0;
    return v;
  }

  TaskResult make_mutant(std::size_t pool_index, std::uint64_t global_index) {
    std::mt19937_64 rng = rng_substream(config_.rng_seed, global_index);
    const Seed& parent = pool_[pool_index];
    SeedVectors vectors;
    if (config_.mode == FuzzMode::Random) {
      vectors = random_vectors(rng, netlist_.primary_inputs().size());
    } else {
      const auto schedule = mutation_schedule(config_.mutation);
      const MutStage stage = schedule[global_index % schedule.size()];
      vectors = mutate(parent.vectors, stage, rng, config_.mutation);
    }
    TaskResult r = simulate(vectors, parent.id);
    r.vectors = std::move(vectors);
    return r;
  }

  TaskResult simulate(const SeedVectors& vectors, std::uint64_t parent_id) {
    TaskResult r;
    r.parent_id = parent_id;
    r.local = CoverageMap(netlist_, monitor_);
    Simulator sim(netlist_);
    if (config_.reset.enabled()) sim.set_reset(config_.reset);
    const SimStats stats = sim.simulate_seed(vectors, &r.local);
    r.cycles = stats.cycles;
    return r;
  }

  void consider(TaskResult r, bool from_pool, std::size_t pool_index) {
    ++iterations_;
    r.local.shift_cycles(total_cycles_);
    total_cycles_ += r.cycles;

    CoverageMap candidate = coverage_;
    candidate.merge(r.local);
    const double before = monitor_pct();
    const double after = candidate.percent();
    if (after <= before) return;  // rejected run: flags discarded, replay stays exact

    Seed admitted;
    if (from_pool) {
      admitted = pool_[pool_index];
    } else {
      admitted = Seed::from_vectors(std::move(r.vectors), r.parent_id);
      if (!ids_.insert(admitted.id).second) return;  // duplicate content
    }
    coverage_ = std::move(candidate);
    admitted.gained = after - before;  // delta of the admission metric
    last_admitted_ = admitted.id;
    log::info("admit " + seed_id_string(admitted.id) + " at iteration " +
              std::to_string(iterations_) + ", coverage " +
              std::to_string(reporting_pct()) + "%");
    archive_.push_back(admitted);
    if (!from_pool) pool_.push_back(std::move(admitted));
    push_timeline();
  }

  double monitor_pct() const { return coverage_.percent(); }

  double reporting_pct() const {
    return config_.mode == FuzzMode::Cgf ? coverage_.percent_of(targets_)
                                         : coverage_.percent();
  }

  std::uint64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_)
        .count();
  }

  bool terminated() {
    if (reporting_pct() >= config_.coverage_goal) {
      reason_ = "coverage_goal";
      return true;
    }
    if (config_.time_budget_ms && elapsed_ms() >= *config_.time_budget_ms) {
      reason_ = "time_budget";
      return true;
    }
    if (config_.max_iterations && iterations_ >= *config_.max_iterations) {
      reason_ = "max_iterations";
      return true;
    }
    return false;
  }

  void push_timeline() {
    timeline_.push_back(
        TimelinePoint{total_cycles_, iterations_, total_cycles_, reporting_pct()});
  }

  CampaignResult finalize() {
    CampaignResult out;
    out.archive = std::move(archive_);
    out.pool = std::move(pool_);
    out.targets = targets_;
    out.termination_reason = reason_;
    out.iterations = iterations_;
    out.total_cycles = total_cycles_;
    out.final_coverage = reporting_pct();
    out.last_admitted = last_admitted_;
    out.elapsed_wall_ms = elapsed_ms();
    out.mode = config_.mode;
    out.goal = config_.coverage_goal;
    push_timeline();
    out.timeline = std::move(timeline_);
    out.cycles_to_goal =
        config_.mode == FuzzMode::Cgf
            ? kNeverHit  // reconstructed from targets only when they are the monitor
            : coverage_.cycles_to_goal(config_.coverage_goal);
    if (config_.mode == FuzzMode::Cgf) {
      // Rebuild target-subset goal timing from the full-net map.
      CoverageMap sub(netlist_, targets_);
      sub.merge(coverage_);
      out.cycles_to_goal = sub.cycles_to_goal(config_.coverage_goal);
    }
    out.coverage = std::move(coverage_);
    return out;
  }

  const Netlist& netlist_;
  CampaignConfig config_;
  std::vector<NetId> targets_;
  std::vector<NetId> monitor_;
  CoverageMap coverage_;
  std::vector<Seed> pool_;
  std::vector<Seed> archive_;
  std::unordered_set<std::uint64_t> ids_;
  std::vector<TimelinePoint> timeline_;
  std::uint64_t iterations_ = 0;
  std::uint64_t total_cycles_ = 0;
  std::optional<std::uint64_t> last_admitted_;
  std::string reason_ = "max_iterations";
  Clock::time_point start_;
};

}  // namespace

CampaignResult run_campaign(const Netlist& netlist, std::span<const NetId> targets,
                            const std::vector<SeedPattern>& initial_patterns,
                            const CampaignConfig& config) {
  Campaign campaign(netlist, targets, config);
  return campaign.run(initial_patterns);
}

CampaignResult run_baseline(const Netlist& netlist, std::span<const NetId> targets,
                            const CampaignConfig& config) {
  if (config.mode == FuzzMode::Directed)
    throw ConfigError("run_baseline expects random or cgf mode");
  Campaign campaign(netlist, targets, config);
  return campaign.run({});
}

CoverageMap replay_archive(const Netlist& netlist, std::span<const NetId> monitor,
                           std::span<const Seed> archive, const ResetSpec& reset) {
  CoverageMap map(netlist, std::vector<NetId>(monitor.begin(), monitor.end()));
  Simulator sim(netlist);
  if (reset.enabled()) sim.set_reset(reset);
  for (const Seed& seed : archive) sim.simulate_seed(seed.vectors, &map);
  return map;
}

}  // namespace netfuzz
