#include "schoolchoice/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace schoolchoice {

bool is_permutation_of_schools(std::span<const SchoolId> list, int m) {
  if (static_cast<int>(list.size()) != m) return false;
  std::vector<bool> seen(m, false);
  for (SchoolId b : list) {
    if (b.index < 0 || b.index >= m || seen[b.index]) return false;
    seen[b.index] = true;
  }
  return true;
}

int rank_of(std::span<const SchoolId> list, SchoolId school) {
  if (school.index < 0 || school.index >= static_cast<int>(list.size())) {
    throw std::domain_error("rank_of: school id " + std::to_string(school.index) +
                            " out of range for a list of " + std::to_string(list.size()));
  }
  auto it = std::find(list.begin(), list.end(), school);
  if (it == list.end()) {
    throw std::domain_error("rank_of: school " + std::to_string(school.index) + " not in list");
  }
  return static_cast<int>(it - list.begin()) + 1;
}

SchoolPriority::SchoolPriority(std::vector<int> classes, std::vector<StudentId> strict_order)
    : classes_(std::move(classes)), strict_order_(std::move(strict_order)) {
  const int n = static_cast<int>(classes_.size());
  if (static_cast<int>(strict_order_.size()) != n) {
    throw std::invalid_argument("SchoolPriority: strict order and classes differ in length");
  }
  position_.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    const int s = strict_order_[pos].index;
    if (s < 0 || s >= n || position_[s] != -1) {
      throw std::invalid_argument("SchoolPriority: strict order is not a permutation of students");
    }
    position_[s] = pos;
  }
  for (int pos = 1; pos < n; ++pos) {
    if (classes_[strict_order_[pos - 1].index] > classes_[strict_order_[pos].index]) {
      throw std::invalid_argument("SchoolPriority: strict order violates priority classes at position " +
                                  std::to_string(pos));
    }
  }
}

SchoolPriority SchoolPriority::from_order(std::vector<StudentId> strict_order) {
  std::vector<int> classes(strict_order.size(), 1);
  return SchoolPriority(std::move(classes), std::move(strict_order));
}

Instance::Instance(int n, int m, std::vector<int> capacities, Profile true_prefs,
                   std::vector<SchoolPriority> priorities, std::optional<Provenance> provenance)
    : n_(n),
      m_(m),
      capacities_(std::move(capacities)),
      true_prefs_(std::move(true_prefs)),
      priorities_(std::move(priorities)),
      provenance_(std::move(provenance)) {
  if (n_ < 1 || m_ < 1) throw std::invalid_argument("Instance: need n >= 1 and m >= 1");
  if (static_cast<int>(capacities_.size()) != m_) {
    throw std::invalid_argument("Instance: expected " + std::to_string(m_) + " capacities");
  }
  long long total = 0;
  for (int j = 0; j < m_; ++j) {
    if (capacities_[j] < 1) {
      throw std::invalid_argument("Instance: school " + std::to_string(j) + " has capacity < 1");
    }
    total += capacities_[j];
  }
  if (total != n_) {
    throw std::invalid_argument("Instance: capacities sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n_));
  }
  if (static_cast<int>(true_prefs_.size()) != n_) {
    throw std::invalid_argument("Instance: expected " + std::to_string(n_) + " preference lists");
  }
  for (int i = 0; i < n_; ++i) {
    if (!is_permutation_of_schools(true_prefs_[i], m_)) {
      throw std::invalid_argument("Instance: preference list of student " + std::to_string(i) +
                                  " is not a permutation of the schools");
    }
  }
  if (static_cast<int>(priorities_.size()) != m_) {
    throw std::invalid_argument("Instance: expected " + std::to_string(m_) + " school priorities");
  }
  for (int j = 0; j < m_; ++j) {
    if (static_cast<int>(priorities_[j].strict_order().size()) != n_) {
      throw std::invalid_argument("Instance: priority of school " + std::to_string(j) +
                                  " does not rank all students");
    }
  }
}

Matching::Matching(std::vector<SchoolId> assignment, std::vector<std::vector<StudentId>> roster)
    : assignment_(std::move(assignment)), roster_(std::move(roster)) {}

Matching Matching::from_assignment(std::vector<SchoolId> assignment, int m) {
  std::vector<std::vector<StudentId>> roster(m);
  for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
    const int b = assignment[i].index;
    if (b < 0 || b >= m) {
      throw std::domain_error("Matching: student " + std::to_string(i) + " assigned to unknown school " +
                              std::to_string(b));
    }
    roster[b].push_back(StudentId{i});
  }
  return Matching(std::move(assignment), std::move(roster));
}

std::optional<MatchingViolation> validate_matching(const Instance& inst, const Matching& matching) {
  using Kind = MatchingViolation::Kind;
  const int n = inst.n();
  const int m = inst.m();
  const auto& assignment = matching.assignment();

  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(assignment.size())) {
      return MatchingViolation{Kind::kTotality, i, "student " + std::to_string(i) + " is unassigned"};
    }
    const int b = assignment[i].index;
    if (b < 0 || b >= m) {
      return MatchingViolation{Kind::kTotality, i,
                               "student " + std::to_string(i) + " assigned to unknown school " +
                                   std::to_string(b)};
    }
  }
  if (static_cast<int>(assignment.size()) > n) {
    return MatchingViolation{Kind::kTotality, n, "assignment names more than n students"};
  }

  const auto& rosters = matching.rosters();
  if (static_cast<int>(rosters.size()) != m) {
    return MatchingViolation{Kind::kRoster, 0, "roster count differs from school count"};
  }
  for (int j = 0; j < m; ++j) {
    if (static_cast<int>(rosters[j].size()) > inst.capacities()[j]) {
      return MatchingViolation{Kind::kCapacity, j,
                               "school " + std::to_string(j) + " holds " + std::to_string(rosters[j].size()) +
                                   " students, capacity " + std::to_string(inst.capacities()[j])};
    }
  }

  // Each student must appear exactly once, in the roster of its own school.
  std::vector<int> appearances(n, 0);
  for (int j = 0; j < m; ++j) {
    for (StudentId s : rosters[j]) {
      if (s.index < 0 || s.index >= n) {
        return MatchingViolation{Kind::kRoster, s.index,
                                 "roster of school " + std::to_string(j) + " names unknown student " +
                                     std::to_string(s.index)};
      }
      if (assignment[s.index].index != j || ++appearances[s.index] > 1) {
        return MatchingViolation{Kind::kRoster, s.index,
                                 "student " + std::to_string(s.index) + " misplaced in roster of school " +
                                     std::to_string(j)};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (appearances[i] != 1) {
      return MatchingViolation{Kind::kRoster, i,
                               "student " + std::to_string(i) + " missing from roster of school " +
                                   std::to_string(assignment[i].index)};
    }
  }
  return std::nullopt;
}

}  // namespace schoolchoice
