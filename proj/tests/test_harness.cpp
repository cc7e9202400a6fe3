#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "schoolchoice/harness.hpp"
#include "support.hpp"

using namespace schoolchoice;
using namespace schoolchoice::testing;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.gen.n = 60;
  cfg.gen.m = 6;
  cfg.trials = 4;
  cfg.soph_counts = {0, 10, 30, 60};
  cfg.master_seed = 123;
  return cfg;
}

std::string csv_of(const std::vector<AggregateRow>& rows) {
  std::ostringstream out;
  write_csv(rows, out);
  return out.str();
}

bool same_record(const MetricsRecord& a, const MetricsRecord& b) {
  return a.mechanism == b.mechanism && a.strategy == b.strategy && a.k_sophisticated == b.k_sophisticated &&
         a.em_higher == b.em_higher && a.em_top3 == b.em_top3 && a.em_selected == b.em_selected &&
         a.em_selected_baseline == b.em_selected_baseline && a.trial_seed == b.trial_seed;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("SweepConfig validation") {
  CHECK_NOTHROW(SweepConfig{}.validate());
  CHECK(default_soph_counts().size() == 20);
  CHECK(default_soph_counts().front() == 100);
  CHECK(default_soph_counts().back() == 2000);

  SweepConfig cfg = small_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = small_config();
  cfg.soph_counts = {61};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = small_config();
  cfg.soph_counts = {10, 10};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = small_config();
  cfg.strategies.clear();
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = small_config();
  cfg.mechanisms.clear();
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = small_config();
  CHECK_THROWS_AS(run_sweep(cfg, 0), ConfigError);
}

TEST_CASE("no sophisticated students gives all-zero records") {
  SweepConfig cfg = small_config();
  cfg.soph_counts = {0};
  auto records = run_trial(cfg, 0);
  CHECK(records.size() == 6);
  for (const auto& r : records) {
    CHECK(r.em_higher == 0.0);
    CHECK(r.em_top3 == 0.0);
    CHECK(r.em_selected.has_value() == (r.strategy == StrategyKind::kC));
    if (r.em_selected) CHECK(*r.em_selected == 0.0);
  }
}

TEST_CASE("run_trial is deterministic and computes each baseline once") {
  SweepConfig cfg = small_config();
  TrialCounters counters;
  auto first = run_trial(cfg, 2, &counters);
  auto second = run_trial(cfg, 2);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(same_record(first[i], second[i]));
  CHECK(counters.baseline_runs == cfg.mechanisms.size());
  // One altered run per (strategy, non-zero k, mechanism).
  CHECK(counters.altered_runs == cfg.strategies.size() * 3 * cfg.mechanisms.size());
}

TEST_CASE("run_trial matches the pipeline assembled by hand") {
  SweepConfig cfg;
  cfg.gen.n = 3;
  cfg.gen.m = 2;
  cfg.trials = 1;
  cfg.strategies = {StrategyKind::kA};
  cfg.soph_counts = {1};
  cfg.master_seed = 5;

  auto records = run_trial(cfg, 0);
  REQUIRE(records.size() == 2);

  Rng instance_rng(trial_seed(5, 0));
  const Instance inst = build_instance(cfg.gen, instance_rng);
  Rng sampling_rng(sampling_seed(5, 0, StrategyKind::kA, 1));
  const auto soph = sample_sophisticated(sampling_rng, 3, 1);
  REQUIRE(soph.size() == 1);
  const StudentId s = soph[0];
  const SchoolId popular = most_popular_rank1(inst.true_prefs());
  Profile reported = inst.true_prefs();
  if (reported[s.index][0] == popular) std::swap(reported[s.index][0], reported[s.index][1]);

  for (const auto& rec : records) {
    const Matching m0 = run_mechanism(rec.mechanism, inst, inst.true_prefs());
    const Matching m1 = run_mechanism(rec.mechanism, inst, reported);
    const int before = true_rank(inst, s, m0.school_of(s));
    const int after = true_rank(inst, s, m1.school_of(s));
    CHECK(rec.em_higher == (after < before ? 100.0 : 0.0));
    CHECK(rec.em_top3 == 0.0);  // with two schools everyone is always in their top 3
    CHECK_FALSE(rec.em_selected.has_value());
    CHECK(rec.trial_seed == trial_seed(5, 0));
  }
}

TEST_CASE("a single trial aggregates to itself") {
  SweepConfig cfg = small_config();
  cfg.trials = 1;
  auto records = run_trial(cfg, 0);
  auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == records.size());
  for (const auto& row : rows) {
    CHECK(row.trials == 1);
    int matches = 0;
    for (const auto& rec : records) {
      if (rec.mechanism == row.mechanism && rec.strategy == row.strategy && rec.k_sophisticated == row.k_sophisticated) {
        ++matches;
        CHECK(row.mean_em_higher == rec.em_higher);
        CHECK(row.mean_em_top3 == rec.em_top3);
        CHECK(row.mean_em_selected == rec.em_selected);
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("rows are sorted by strategy, mechanism, k") {
  SweepConfig cfg = small_config();
  cfg.soph_counts = {30, 10, 0};
  cfg.strategies = {StrategyKind::kC, StrategyKind::kA};
  cfg.mechanisms = {Mechanism::kDeferredAcceptance, Mechanism::kBoston};
  auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].strategy == StrategyKind::kA);
  CHECK(rows[0].mechanism == Mechanism::kBoston);
  CHECK(rows[0].k_sophisticated == 0);
  CHECK(rows[2].k_sophisticated == 30);
  CHECK(rows[3].mechanism == Mechanism::kDeferredAcceptance);
  CHECK(rows[6].strategy == StrategyKind::kC);
  for (const auto& r : rows) CHECK(r.mean_em_selected.has_value() == (r.strategy == StrategyKind::kC));
}

TEST_CASE("different seeds change the numbers but not the schema") {
  SweepConfig a = small_config();
  SweepConfig b = small_config();
  b.master_seed = 124;
  auto ra = run_sweep(a);
  auto rb = run_sweep(b);
  REQUIRE(ra.size() == rb.size());
  bool any_difference = false;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].mechanism == rb[i].mechanism);
    CHECK(ra[i].strategy == rb[i].strategy);
    CHECK(ra[i].k_sophisticated == rb[i].k_sophisticated);
    CHECK(ra[i].trials == rb[i].trials);
    any_difference |= ra[i].mean_em_higher != rb[i].mean_em_higher || ra[i].mean_em_top3 != rb[i].mean_em_top3;
  }
  CHECK(any_difference);
}

TEST_CASE("output does not depend on the number of workers") {
  SweepConfig cfg = small_config();
  cfg.trials = 7;
  const std::string serial = csv_of(run_sweep(cfg, 1));
  CHECK(csv_of(run_sweep(cfg, 3)) == serial);
  CHECK(csv_of(run_sweep(cfg, 16)) == serial);
}

TEST_CASE("adding a strategy leaves the other cells alone") {
  SweepConfig only_a = small_config();
  only_a.strategies = {StrategyKind::kA};
  SweepConfig a_and_c = small_config();
  a_and_c.strategies = {StrategyKind::kC, StrategyKind::kA};
  auto narrow = run_sweep(only_a);
  auto wide = run_sweep(a_and_c);
  std::vector<AggregateRow> wide_a;
  for (const auto& r : wide) {
    if (r.strategy == StrategyKind::kA) wide_a.push_back(r);
  }
  CHECK(csv_of(narrow) == csv_of(wide_a));
}

TEST_CASE("write_csv formatting") {
  AggregateRow row{Mechanism::kBoston, StrategyKind::kA, 200, 12.5, 3.25, std::nullopt, 100};
  CHECK(csv_of({row}) ==
        "mechanism,strategy,k_sophisticated,mean_em_higher,mean_em_top3,mean_em_selected,trials\n"
        "boston,A,200,12.5000,3.2500,,100\n");
  AggregateRow c_row{Mechanism::kDeferredAcceptance, StrategyKind::kC, 1900, 0.0, 1.0 / 3.0, 18.123456, 7};
  CHECK(csv_of({c_row}).ends_with("da,C,1900,0.0000,0.3333,18.1235,7\n"));
  CHECK_THROWS_AS(csv_of({}), std::invalid_argument);
}

TEST_CASE("write_csv to a file") {
  const auto dir = std::filesystem::temp_directory_path() / "schoolchoice_harness_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rows.csv";
  std::filesystem::remove(path);

  CHECK_THROWS_AS(write_csv({}, path.string()), std::invalid_argument);
  CHECK_FALSE(std::filesystem::exists(path));

  auto rows = run_sweep(small_config());
  write_csv(rows, path.string());
  const std::string first = read_file(path);
  write_csv(rows, path.string());
  CHECK(read_file(path) == first);
  CHECK(first == csv_of(rows));

  CHECK_THROWS_AS(write_csv(rows, (dir / "missing" / "rows.csv").string()), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("per-trial CSV lists every record") {
  SweepConfig cfg = small_config();
  cfg.trials = 2;
  SweepResult result = run_sweep_detailed(cfg);
  std::ostringstream out;
  write_per_trial_csv(result.trials, out);
  const std::string text = out.str();
  const auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 1 + 2 * 3 * 4 * 2);
  CHECK(text.starts_with("trial,trial_seed,mechanism,strategy,k_sophisticated,em_higher,em_top3,em_selected,"
                         "em_selected_baseline\n"));
}
