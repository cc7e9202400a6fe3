#include "schoolchoice/strategies.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schoolchoice {

namespace {

SchoolId argmax_lowest_index(const std::vector<int>& counts) {
  return SchoolId{static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin())};
}

void require_two_schools(std::size_t m) {
  if (m < 2) throw std::domain_error("strategies need at least two schools");
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kA:
      return "A";
    case StrategyKind::kB:
      return "B";
    case StrategyKind::kC:
      return "C";
  }
  return "?";
}

std::vector<StudentId> sample_sophisticated(Rng& rng, int n, int k) {
  if (k < 0 || k > n) {
    throw std::domain_error("cannot pick " + std::to_string(k) + " sophisticated students out of " +
                            std::to_string(n));
  }
  std::vector<StudentId> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = StudentId{i};
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

SchoolId most_popular_rank1(const Profile& profile) {
  if (profile.empty() || profile.front().empty()) throw std::domain_error("empty profile");
  std::vector<int> counts(profile.front().size(), 0);
  for (const auto& list : profile) ++counts[list.front().index];
  return argmax_lowest_index(counts);
}

SchoolId most_bottom_half(const Profile& profile, int m) {
  require_two_schools(m);
  if (profile.empty()) throw std::domain_error("empty profile");
  std::vector<int> counts(m, 0);
  for (const auto& list : profile) {
    for (int pos = m / 2; pos < m; ++pos) ++counts[list[pos].index];
  }
  return argmax_lowest_index(counts);
}

PreferenceList apply_strategy_a(PreferenceList list, SchoolId popular) {
  require_two_schools(list.size());
  if (list[0] == popular) std::swap(list[0], list[1]);
  return list;
}

PreferenceList apply_strategy_b(PreferenceList list, SchoolId popular) {
  require_two_schools(list.size());
  if (list[0] == popular) std::rotate(list.begin(), list.begin() + 1, list.end());
  return list;
}

PreferenceList apply_strategy_c(PreferenceList list, SchoolId unpopular, int m) {
  require_two_schools(m);
  auto it = std::find(list.begin(), list.begin() + m / 2, unpopular);
  if (it != list.begin() + m / 2) std::rotate(list.begin(), it, it + 1);
  return list;
}

AlterationPlan build_plan(const Instance& inst, StrategyKind strategy, int k, Rng& rng) {
  AlterationPlan plan;
  plan.strategy = strategy;
  plan.sophisticated = sample_sophisticated(rng, inst.n(), k);
  plan.reported = inst.true_prefs();
  if (plan.sophisticated.empty()) {
    if (strategy == StrategyKind::kC && inst.m() >= 2) {
      plan.selected_school = most_bottom_half(inst.true_prefs(), inst.m());
    }
    return plan;
  }
  require_two_schools(inst.m());

  switch (strategy) {
    case StrategyKind::kA: {
      const SchoolId popular = most_popular_rank1(inst.true_prefs());
      for (StudentId s : plan.sophisticated) {
        plan.reported[s.index] = apply_strategy_a(inst.true_prefs(s), popular);
      }
      break;
    }
    case StrategyKind::kB: {
      const SchoolId popular = most_popular_rank1(inst.true_prefs());
      for (StudentId s : plan.sophisticated) {
        plan.reported[s.index] = apply_strategy_b(inst.true_prefs(s), popular);
      }
      break;
    }
    case StrategyKind::kC: {
      const SchoolId unpopular = most_bottom_half(inst.true_prefs(), inst.m());
      for (StudentId s : plan.sophisticated) {
        plan.reported[s.index] = apply_strategy_c(inst.true_prefs(s), unpopular, inst.m());
      }
      plan.selected_school = unpopular;
      break;
    }
  }
  return plan;
}

}  // namespace schoolchoice
