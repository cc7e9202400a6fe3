#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schoolchoice/geninst.hpp"
#include "schoolchoice/harness.hpp"
#include "schoolchoice/mechanisms.hpp"
#include "schoolchoice/oracle.hpp"

using namespace schoolchoice;

namespace {

StrategyKind parse_strategy(const std::string& s) {
  if (s == "A" || s == "a") return StrategyKind::kA;
  if (s == "B" || s == "b") return StrategyKind::kB;
  if (s == "C" || s == "c") return StrategyKind::kC;
  throw ConfigError("unknown strategy '" + s + "' (expected A, B or C)");
}

Mechanism parse_mechanism(const std::string& s) {
  if (s == "boston") return Mechanism::kBoston;
  if (s == "da") return Mechanism::kDeferredAcceptance;
  throw ConfigError("unknown mechanism '" + s + "' (expected boston or da)");
}

std::string list_to_string(const PreferenceList& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += "b" + std::to_string(list[i].index);
  }
  return out + "]";
}

void print_matching(std::ostream& out, const Instance& inst, const Matching& matching) {
  for (int i = 0; i < inst.n(); ++i) {
    const SchoolId b = matching.school_of(StudentId{i});
    out << "    a" << i << " -> b" << b.index << " (true rank " << rank_of(inst.true_prefs(StudentId{i}), b) << ")\n";
  }
}

int run_demo() {
  const WitnessCase wc = witness_instance();
  const Instance& inst = wc.instance;
  std::cout << "Witness instance: " << inst.n() << " students, " << inst.m() << " unit-capacity schools\n";
  for (int i = 0; i < inst.n(); ++i) {
    std::cout << "  a" << i << " prefers " << list_to_string(inst.true_prefs(StudentId{i})) << '\n';
  }
  for (int j = 0; j < inst.m(); ++j) {
    std::cout << "  b" << j << " priority:";
    for (StudentId s : inst.priority(SchoolId{j}).strict_order()) std::cout << " a" << s.index;
    std::cout << '\n';
  }

  Profile manipulated = inst.true_prefs();
  manipulated[wc.student.index] = wc.misreport;
  for (Mechanism mech : {Mechanism::kBoston, Mechanism::kDeferredAcceptance}) {
    std::cout << '\n' << mechanism_name(mech) << ", everyone truthful:\n";
    print_matching(std::cout, inst, run_mechanism(mech, inst, inst.true_prefs()));
    std::cout << mechanism_name(mech) << ", a" << wc.student.index << " reports " << list_to_string(wc.misreport)
              << ":\n";
    print_matching(std::cout, inst, run_mechanism(mech, inst, manipulated));
    const BestResponse best = exhaustive_best_response(inst, mech, wc.student);
    std::cout << "  best response of a" << wc.student.index << ": b" << best.best_school.index << " (true rank "
              << best.best_true_rank << ") via " << list_to_string(best.witness) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"School choice simulator: Boston vs. deferred acceptance under strategic misreporting"};
  app.require_subcommand(1);

  SweepConfig cfg;
  std::vector<std::string> strategy_names = {"A", "B", "C"};
  std::vector<std::string> mechanism_names = {"boston", "da"};
  std::string out_path;
  std::string per_trial_path;
  int jobs = 1;

  auto* sweep = app.add_subcommand("sweep", "Run the Monte Carlo sweep and print aggregate CSV");
  sweep->add_option("--students", cfg.gen.n, "Number of students")->capture_default_str();
  sweep->add_option("--schools", cfg.gen.m, "Number of schools")->capture_default_str();
  sweep->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
  sweep->add_option("--strategies", strategy_names, "Subset of A,B,C")->delimiter(',');
  sweep->add_option("--mechanisms", mechanism_names, "Subset of boston,da")->delimiter(',');
  sweep->add_option("--soph-counts", cfg.soph_counts, "Sophisticated-student counts (default 100..2000 step 100)")
      ->delimiter(',');
  sweep->add_option("--seed", cfg.master_seed, "Master seed")->capture_default_str();
  sweep->add_option("--out", out_path, "Aggregate CSV path (default stdout)");
  sweep->add_option("--per-trial", per_trial_path, "Optional per-trial records CSV");
  sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Run both mechanisms on the Boston manipulability witness");

  GenConfig gen_cfg;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Generate one instance and write its text dump");
  generate->add_option("--students", gen_cfg.n, "Number of students")->capture_default_str();
  generate->add_option("--schools", gen_cfg.m, "Number of schools")->capture_default_str();
  generate->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  generate->add_option("--out", gen_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*demo) return run_demo();

    if (*generate) {
      Rng rng(gen_seed);
      const Instance inst = build_instance(gen_cfg, rng);
      if (gen_out.empty()) {
        write_instance(std::cout, inst);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error("cannot open " + gen_out + " for writing");
        write_instance(out, inst);
        if (!out) throw std::runtime_error("failed writing " + gen_out);
      }
      return 0;
    }

    cfg.strategies.clear();
    for (const auto& s : strategy_names) cfg.strategies.push_back(parse_strategy(s));
    cfg.mechanisms.clear();
    for (const auto& s : mechanism_names) cfg.mechanisms.push_back(parse_mechanism(s));
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.validate();

    const SweepResult result = run_sweep_detailed(cfg, jobs);
    if (cfg.output_path) {
      write_csv(result.rows, *cfg.output_path);
    } else {
      write_csv(result.rows, std::cout);
    }
    if (!per_trial_path.empty()) write_per_trial_csv(result.trials, per_trial_path);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
