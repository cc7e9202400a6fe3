#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "schoolchoice/model.hpp"
#include "schoolchoice/rng.hpp"

namespace schoolchoice {

// A: demote the most popular first choice to rank 2.
// B: demote the most popular first choice to the last rank.
// C: promote the school most often ranked in the bottom half to rank 1 when
//    it sits in one's own top half.
enum class StrategyKind { kA, kB, kC };

std::string_view strategy_name(StrategyKind kind);

struct AlterationPlan {
  std::vector<StudentId> sophisticated;  // ascending ids
  StrategyKind strategy;
  Profile reported;
  std::optional<SchoolId> selected_school;  // strategy C only
};

// Uniform k-subset of [0, n), sorted. Throws std::domain_error unless 0 <= k <= n.
std::vector<StudentId> sample_sophisticated(Rng& rng, int n, int k);

// School ranked first by the most students; ties go to the lowest index.
SchoolId most_popular_rank1(const Profile& profile);

// School placed in ranks floor(m/2)+1 .. m by the most students; ties go to
// the lowest index. Throws std::domain_error for m < 2.
SchoolId most_bottom_half(const Profile& profile, int m);

PreferenceList apply_strategy_a(PreferenceList list, SchoolId popular);
PreferenceList apply_strategy_b(PreferenceList list, SchoolId popular);
PreferenceList apply_strategy_c(PreferenceList list, SchoolId unpopular, int m);

// Samples k sophisticated students and rewrites their true lists with the
// strategy. The target school is computed once from the true profile.
AlterationPlan build_plan(const Instance& inst, StrategyKind strategy, int k, Rng& rng);

}  // namespace schoolchoice
