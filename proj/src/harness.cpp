#include "schoolchoice/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace schoolchoice {

namespace {

enum class SeedPurpose : std::uint64_t { kInstance = 1, kSampling = 2 };

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  // Render first so a failure never leaves a partial file behind.
  std::ostringstream body;
  writer(body);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body.str();
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::vector<int> default_soph_counts() {
  std::vector<int> counts;
  for (int k = 100; k <= 2000; k += 100) counts.push_back(k);
  return counts;
}

void SweepConfig::validate() const {
  gen.validate();
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (strategies.empty()) throw ConfigError("no strategies selected");
  if (mechanisms.empty()) throw ConfigError("no mechanisms selected");
  if (soph_counts.empty()) throw ConfigError("no sophisticated-student counts given");
  for (int k : soph_counts) {
    if (k < 0 || k > gen.n) {
      throw ConfigError("sophisticated count " + std::to_string(k) + " outside [0, " + std::to_string(gen.n) + "]");
    }
    if (k > 0 && gen.m < 2) throw ConfigError("strategies need at least two schools");
  }
  auto sorted = soph_counts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("duplicate sophisticated-student counts");
  }
  auto strats = strategies;
  std::sort(strats.begin(), strats.end());
  if (std::adjacent_find(strats.begin(), strats.end()) != strats.end()) throw ConfigError("duplicate strategies");
  auto mechs = mechanisms;
  std::sort(mechs.begin(), mechs.end());
  if (std::adjacent_find(mechs.begin(), mechs.end()) != mechs.end()) throw ConfigError("duplicate mechanisms");
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
  return derive_seed({master_seed, static_cast<std::uint64_t>(trial_index),
                      static_cast<std::uint64_t>(SeedPurpose::kInstance)});
}

std::uint64_t sampling_seed(std::uint64_t master_seed, int trial_index, StrategyKind strategy, int k) {
  return derive_seed({master_seed, static_cast<std::uint64_t>(trial_index),
                      static_cast<std::uint64_t>(SeedPurpose::kSampling), static_cast<std::uint64_t>(strategy) + 1,
                      static_cast<std::uint64_t>(k)});
}

std::vector<MetricsRecord> run_trial(const SweepConfig& cfg, int trial_index, TrialCounters* counters) {
  cfg.validate();
  const std::uint64_t seed = trial_seed(cfg.master_seed, trial_index);
  Rng instance_rng(seed);
  const Instance inst = build_instance(cfg.gen, instance_rng);

  std::vector<Matching> baselines;
  baselines.reserve(cfg.mechanisms.size());
  for (Mechanism mech : cfg.mechanisms) {
    baselines.push_back(run_mechanism(mech, inst, inst.true_prefs()));
    if (counters) ++counters->baseline_runs;
  }

  std::vector<MetricsRecord> records;
  for (StrategyKind strategy : cfg.strategies) {
    for (int k : cfg.soph_counts) {
      Rng sampling_rng(sampling_seed(cfg.master_seed, trial_index, strategy, k));
      const AlterationPlan plan = build_plan(inst, strategy, k, sampling_rng);
      for (std::size_t mi = 0; mi < cfg.mechanisms.size(); ++mi) {
        const Matching& baseline = baselines[mi];
        MetricsRecord rec;
        rec.mechanism = cfg.mechanisms[mi];
        rec.strategy = strategy;
        rec.k_sophisticated = k;
        rec.trial_seed = seed;
        if (plan.sophisticated.empty()) {
          // Nothing to alter, the altered run would reproduce the baseline.
          if (plan.selected_school) {
            rec.em_selected = 0.0;
            rec.em_selected_baseline = 0.0;
          }
          records.push_back(rec);
          continue;
        }
        const Matching altered = run_mechanism(rec.mechanism, inst, plan.reported);
        if (counters) ++counters->altered_runs;
        rec.em_higher = em_higher(baseline, altered, plan.sophisticated, inst.true_prefs());
        rec.em_top3 = em_top3(baseline, altered, plan.sophisticated, inst.true_prefs());
        if (plan.selected_school) {
          rec.em_selected = em_selected(altered, plan.sophisticated, *plan.selected_school);
          rec.em_selected_baseline = em_selected(baseline, plan.sophisticated, *plan.selected_school);
        }
        records.push_back(rec);
      }
    }
  }
  return records;
}

std::vector<AggregateRow> aggregate(const std::vector<std::vector<MetricsRecord>>& trials) {
  struct Sums {
    double higher = 0.0;
    double top3 = 0.0;
    double selected = 0.0;
    bool has_selected = false;
    int count = 0;
  };
  std::map<std::tuple<StrategyKind, Mechanism, int>, Sums> cells;
  for (const auto& records : trials) {
    for (const MetricsRecord& rec : records) {
      Sums& s = cells[{rec.strategy, rec.mechanism, rec.k_sophisticated}];
      s.higher += rec.em_higher;
      s.top3 += rec.em_top3;
      if (rec.em_selected) {
        s.selected += *rec.em_selected;
        s.has_selected = true;
      }
      ++s.count;
    }
  }
  std::vector<AggregateRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, s] : cells) {
    AggregateRow row;
    std::tie(row.strategy, row.mechanism, row.k_sophisticated) = key;
    row.mean_em_higher = s.higher / s.count;
    row.mean_em_top3 = s.top3 / s.count;
    if (s.has_selected) row.mean_em_selected = s.selected / s.count;
    row.trials = s.count;
    rows.push_back(row);
  }
  return rows;
}

SweepResult run_sweep_detailed(const SweepConfig& cfg, int jobs) {
  cfg.validate();
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  SweepResult result;
  result.trials.resize(cfg.trials);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int t = next++; t < cfg.trials; t = next++) {
      try {
        result.trials[t] = run_trial(cfg, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.trials;
      }
    }
  };
  const int workers = std::min(jobs, cfg.trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.rows = aggregate(result.trials);
  return result;
}

std::vector<AggregateRow> run_sweep(const SweepConfig& cfg, int jobs) { return run_sweep_detailed(cfg, jobs).rows; }

void write_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
  if (rows.empty()) throw std::invalid_argument("write_csv: no rows to write");
  out << "mechanism,strategy,k_sophisticated,mean_em_higher,mean_em_top3,mean_em_selected,trials\n";
  for (const AggregateRow& row : rows) {
    out << mechanism_name(row.mechanism) << ',' << strategy_name(row.strategy) << ',' << row.k_sophisticated << ','
        << fixed4(row.mean_em_higher) << ',' << fixed4(row.mean_em_top3) << ','
        << (row.mean_em_selected ? fixed4(*row.mean_em_selected) : std::string()) << ',' << row.trials << '\n';
  }
}

void write_csv(const std::vector<AggregateRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("write_csv: no rows to write to " + path);
  write_file(path, [&](std::ostream& out) { write_csv(rows, out); });
}

void write_per_trial_csv(const std::vector<std::vector<MetricsRecord>>& trials, std::ostream& out) {
  out << "trial,trial_seed,mechanism,strategy,k_sophisticated,em_higher,em_top3,em_selected,em_selected_baseline\n";
  for (std::size_t t = 0; t < trials.size(); ++t) {
    for (const MetricsRecord& rec : trials[t]) {
      out << t << ',' << rec.trial_seed << ',' << mechanism_name(rec.mechanism) << ','
          << strategy_name(rec.strategy) << ',' << rec.k_sophisticated << ',' << fixed4(rec.em_higher) << ','
          << fixed4(rec.em_top3) << ',' << (rec.em_selected ? fixed4(*rec.em_selected) : std::string()) << ','
          << (rec.em_selected_baseline ? fixed4(*rec.em_selected_baseline) : std::string()) << '\n';
    }
  }
}

void write_per_trial_csv(const std::vector<std::vector<MetricsRecord>>& trials, const std::string& path) {
  write_file(path, [&](std::ostream& out) { write_per_trial_csv(trials, out); });
}

}  // namespace schoolchoice
