#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schoolchoice/geninst.hpp"
#include "schoolchoice/mechanisms.hpp"
#include "schoolchoice/metrics.hpp"
#include "schoolchoice/strategies.hpp"

namespace schoolchoice {

std::vector<int> default_soph_counts();

struct SweepConfig {
  GenConfig gen;
  int trials = 100;
  std::vector<StrategyKind> strategies = {StrategyKind::kA, StrategyKind::kB, StrategyKind::kC};
  std::vector<Mechanism> mechanisms = {Mechanism::kBoston, Mechanism::kDeferredAcceptance};
  std::vector<int> soph_counts = default_soph_counts();
  std::uint64_t master_seed = 0;
  std::optional<std::string> output_path;

  // Throws ConfigError on the first broken invariant.
  void validate() const;
};

struct AggregateRow {
  Mechanism mechanism;
  StrategyKind strategy;
  int k_sophisticated = 0;
  double mean_em_higher = 0.0;
  double mean_em_top3 = 0.0;
  std::optional<double> mean_em_selected;
  int trials = 0;
};

// Mechanism invocations made by run_trial, split by profile.
struct TrialCounters {
  std::size_t baseline_runs = 0;
  std::size_t altered_runs = 0;
};

// Seed of the instance stream for one trial.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index);
// Seed of the sophisticated-sampling stream for one (trial, strategy, k) cell.
std::uint64_t sampling_seed(std::uint64_t master_seed, int trial_index, StrategyKind strategy, int k);

// One instance, one truthful baseline per mechanism, then one record per
// (strategy, k, mechanism) in config order.
std::vector<MetricsRecord> run_trial(const SweepConfig& cfg, int trial_index, TrialCounters* counters = nullptr);

struct SweepResult {
  std::vector<AggregateRow> rows;                   // sorted by (strategy, mechanism, k)
  std::vector<std::vector<MetricsRecord>> trials;  // indexed by trial
};

// Runs all trials on `jobs` worker threads. Output does not depend on `jobs`.
SweepResult run_sweep_detailed(const SweepConfig& cfg, int jobs = 1);
std::vector<AggregateRow> run_sweep(const SweepConfig& cfg, int jobs = 1);

// Cell means over trials, summed in trial-index order.
std::vector<AggregateRow> aggregate(const std::vector<std::vector<MetricsRecord>>& trials);

// CSV with header
//   mechanism,strategy,k_sophisticated,mean_em_higher,mean_em_top3,mean_em_selected,trials
// four decimals per float, empty field for a missing em_selected. Throws
// std::invalid_argument for empty rows; the path overload throws
// std::runtime_error naming the path on I/O failure and creates no file for
// empty rows.
void write_csv(const std::vector<AggregateRow>& rows, std::ostream& out);
void write_csv(const std::vector<AggregateRow>& rows, const std::string& path);

// Raw per-trial records, one line each.
void write_per_trial_csv(const std::vector<std::vector<MetricsRecord>>& trials, std::ostream& out);
void write_per_trial_csv(const std::vector<std::vector<MetricsRecord>>& trials, const std::string& path);

}  // namespace schoolchoice
