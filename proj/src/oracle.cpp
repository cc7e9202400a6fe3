#include "schoolchoice/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schoolchoice {

std::vector<std::pair<StudentId, SchoolId>> find_blocking_pairs(const Instance& inst, const Profile& reported,
                                                                const Matching& matching) {
  const int n = inst.n();
  const int m = inst.m();

  // position[j][s]: index of student s in school j's strict order.
  std::vector<std::vector<int>> position(m, std::vector<int>(n));
  for (int j = 0; j < m; ++j) {
    const auto& order = inst.priorities()[j].strict_order();
    for (int pos = 0; pos < n; ++pos) position[j][order[pos].index] = pos;
  }
  // Weakest admitted student per school, or n+1 past the end when a seat is free.
  std::vector<int> weakest(m, -1);
  for (int j = 0; j < m; ++j) {
    const auto& roster = matching.rosters()[j];
    if (static_cast<int>(roster.size()) < inst.capacities()[j]) {
      weakest[j] = n + 1;
      continue;
    }
    for (StudentId s : roster) weakest[j] = std::max(weakest[j], position[j][s.index]);
  }

  std::vector<std::pair<StudentId, SchoolId>> pairs;
  for (int i = 0; i < n; ++i) {
    const auto& list = reported[i];
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[list[r].index] = r;
    const int own = rank[matching.assignment()[i].index];
    for (int j = 0; j < m; ++j) {
      if (rank[j] < own && position[j][i] < weakest[j]) pairs.emplace_back(StudentId{i}, SchoolId{j});
    }
  }
  return pairs;
}

BestResponse exhaustive_best_response(const Instance& inst, Mechanism mech, StudentId student) {
  const int m = inst.m();
  if (m > kMaxEnumerationSchools) {
    throw std::length_error("exhaustive_best_response: " + std::to_string(m) + " schools exceeds the limit of " +
                            std::to_string(kMaxEnumerationSchools));
  }
  const auto& truth = inst.true_prefs(student);
  std::vector<int> true_rank(m);
  for (int r = 0; r < m; ++r) true_rank[truth[r].index] = r + 1;

  Profile reported = inst.true_prefs();
  PreferenceList candidate(m);
  for (int j = 0; j < m; ++j) candidate[j] = SchoolId{j};

  std::optional<BestResponse> best;
  do {
    reported[student.index] = candidate;
    const SchoolId got = run_mechanism(mech, inst, reported).school_of(student);
    if (!best || true_rank[got.index] < best->best_true_rank) {
      best = BestResponse{got, true_rank[got.index], candidate};
    }
  } while (std::next_permutation(candidate.begin(), candidate.end()));
  return *best;
}

WitnessCase witness_instance() {
  auto ids = [](std::initializer_list<int> xs) {
    PreferenceList list;
    for (int x : xs) list.push_back(SchoolId{x});
    return list;
  };
  auto order = [](std::initializer_list<int> xs) {
    std::vector<StudentId> o;
    for (int x : xs) o.push_back(StudentId{x});
    return SchoolPriority::from_order(std::move(o));
  };
  Profile prefs = {ids({0, 1, 2}), ids({0, 1, 2}), ids({1, 0, 2})};
  std::vector<SchoolPriority> priorities = {order({0, 1, 2}), order({1, 2, 0}), order({0, 1, 2})};
  Instance inst(3, 3, {1, 1, 1}, std::move(prefs), std::move(priorities));
  return WitnessCase{std::move(inst), StudentId{1}, ids({1, 0, 2}), 3, 2};
}

}  // namespace schoolchoice
