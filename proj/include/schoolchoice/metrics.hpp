#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "schoolchoice/mechanisms.hpp"
#include "schoolchoice/model.hpp"
#include "schoolchoice/strategies.hpp"

namespace schoolchoice {

// One trial's manipulation benefit for one (mechanism, strategy, k) cell.
// Percentages are over all sophisticated students, 0 when there are none.
struct MetricsRecord {
  Mechanism mechanism;
  StrategyKind strategy;
  int k_sophisticated = 0;
  double em_higher = 0.0;
  double em_top3 = 0.0;
  std::optional<double> em_selected;           // strategy C only
  std::optional<double> em_selected_baseline;  // same count under the truthful matching
  std::uint64_t trial_seed = 0;
};

// Share of sophisticated students whose school under `altered` is ranked
// strictly higher on their true list than under `baseline`.
double em_higher(const Matching& baseline, const Matching& altered, std::span<const StudentId> soph,
                 const Profile& true_prefs);

// Share that land in their true top 3 under `altered` after missing it under
// `baseline`.
double em_top3(const Matching& baseline, const Matching& altered, std::span<const StudentId> soph,
               const Profile& true_prefs);

// Share assigned to `selected` under `matching`.
double em_selected(const Matching& matching, std::span<const StudentId> soph, SchoolId selected);

}  // namespace schoolchoice
