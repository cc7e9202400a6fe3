#include "schoolchoice/mechanisms.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>
#include <string>

namespace schoolchoice {

namespace {

void check_reported(const Instance& inst, const Profile& reported) {
  if (static_cast<int>(reported.size()) != inst.n()) {
    throw std::domain_error("reported profile has " + std::to_string(reported.size()) +
                            " lists, expected " + std::to_string(inst.n()));
  }
  for (int i = 0; i < inst.n(); ++i) {
    if (!is_permutation_of_schools(reported[i], inst.m())) {
      throw std::domain_error("reported list of student " + std::to_string(i) +
                              " is not a permutation of the schools");
    }
  }
  long long seats = 0;
  for (int q : inst.capacities()) seats += q;
  if (seats != inst.n()) throw std::domain_error("capacities do not sum to the number of students");
}

}  // namespace

std::string_view mechanism_name(Mechanism mech) {
  switch (mech) {
    case Mechanism::kBoston:
      return "boston";
    case Mechanism::kDeferredAcceptance:
      return "da";
  }
  return "unknown";
}

BostonOutcome boston_with_rounds(const Instance& inst, const Profile& reported) {
  check_reported(inst, reported);
  const int n = inst.n();
  const int m = inst.m();

  std::vector<int> remaining = inst.capacities();
  std::vector<SchoolId> assignment(n, SchoolId{-1});
  std::vector<int> round_of(n, 0);
  std::vector<StudentId> unassigned(n);
  for (int i = 0; i < n; ++i) unassigned[i] = StudentId{i};

  std::vector<std::vector<StudentId>> applicants(m);
  for (int k = 0; k < m && !unassigned.empty(); ++k) {
    for (auto& a : applicants) a.clear();
    for (StudentId s : unassigned) applicants[reported[s.index][k].index].push_back(s);

    for (int j = 0; j < m; ++j) {
      auto& pool = applicants[j];
      if (pool.empty() || remaining[j] == 0) continue;
      const SchoolPriority& pr = inst.priority(SchoolId{j});
      std::sort(pool.begin(), pool.end(),
                [&](StudentId a, StudentId b) { return pr.position_of(a) < pr.position_of(b); });
      const int admitted = std::min<int>(remaining[j], static_cast<int>(pool.size()));
      for (int t = 0; t < admitted; ++t) {
        assignment[pool[t].index] = SchoolId{j};
        round_of[pool[t].index] = k + 1;
      }
      remaining[j] -= admitted;
    }
    std::erase_if(unassigned, [&](StudentId s) { return assignment[s.index].index >= 0; });
  }
  if (!unassigned.empty()) {
    // Cannot happen while seats == n: some school always has room for the
    // student's last-ranked choice.
    throw std::logic_error("boston: students left unassigned after the final round");
  }
  return BostonOutcome{Matching::from_assignment(std::move(assignment), m), std::move(round_of)};
}

Matching boston(const Instance& inst, const Profile& reported) {
  return boston_with_rounds(inst, reported).matching;
}

Matching deferred_acceptance(const Instance& inst, const Profile& reported) {
  std::vector<StudentId> order(inst.n());
  for (int i = 0; i < inst.n(); ++i) order[i] = StudentId{i};
  return deferred_acceptance(inst, reported, order);
}

Matching deferred_acceptance(const Instance& inst, const Profile& reported,
                             std::span<const StudentId> proposal_order) {
  check_reported(inst, reported);
  const int n = inst.n();
  const int m = inst.m();
  if (static_cast<int>(proposal_order.size()) != n) {
    throw std::domain_error("proposal order must list every student once");
  }

  // Per school, a max-heap on priority position: the top is the weakest
  // student currently held.
  using Held = std::priority_queue<std::pair<int, int>>;
  std::vector<Held> held(m);
  std::vector<int> next_choice(n, 0);
  std::deque<StudentId> worklist(proposal_order.begin(), proposal_order.end());
  std::vector<bool> queued(n, false);
  for (StudentId s : worklist) {
    if (s.index < 0 || s.index >= n || queued[s.index]) {
      throw std::domain_error("proposal order must list every student once");
    }
    queued[s.index] = true;
  }

  while (!worklist.empty()) {
    const StudentId s = worklist.front();
    worklist.pop_front();
    if (next_choice[s.index] >= m) {
      throw std::logic_error("deferred_acceptance: student rejected by every school");
    }
    const SchoolId b = reported[s.index][next_choice[s.index]++];
    const int pos = inst.priority(b).position_of(s);
    Held& h = held[b.index];
    if (static_cast<int>(h.size()) < inst.capacity(b)) {
      h.emplace(pos, s.index);
    } else if (pos < h.top().first) {
      worklist.push_back(StudentId{h.top().second});
      h.pop();
      h.emplace(pos, s.index);
    } else {
      worklist.push_back(s);
    }
  }

  std::vector<SchoolId> assignment(n, SchoolId{-1});
  for (int j = 0; j < m; ++j) {
    for (Held h = held[j]; !h.empty(); h.pop()) assignment[h.top().second] = SchoolId{j};
  }
  return Matching::from_assignment(std::move(assignment), m);
}

Matching run_mechanism(Mechanism mech, const Instance& inst, const Profile& reported) {
  switch (mech) {
    case Mechanism::kBoston:
      return boston(inst, reported);
    case Mechanism::kDeferredAcceptance:
      return deferred_acceptance(inst, reported);
  }
  throw std::invalid_argument("unknown mechanism");
}

}  // namespace schoolchoice
