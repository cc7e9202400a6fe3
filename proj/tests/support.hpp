#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "schoolchoice/geninst.hpp"
#include "schoolchoice/model.hpp"
#include "schoolchoice/rng.hpp"

namespace schoolchoice::testing {

inline PreferenceList schools(std::initializer_list<int> ids) {
  PreferenceList list;
  for (int b : ids) list.push_back(SchoolId{b});
  return list;
}

inline std::vector<StudentId> students(std::initializer_list<int> ids) {
  std::vector<StudentId> out;
  for (int s : ids) out.push_back(StudentId{s});
  return out;
}

// Instance with single-class priorities given by strict orders.
inline Instance make_instance(std::vector<int> capacities, std::vector<std::vector<int>> prefs,
                              std::vector<std::vector<int>> orders) {
  const int n = static_cast<int>(prefs.size());
  const int m = static_cast<int>(capacities.size());
  Profile profile;
  for (const auto& p : prefs) {
    PreferenceList list;
    for (int b : p) list.push_back(SchoolId{b});
    profile.push_back(std::move(list));
  }
  std::vector<SchoolPriority> priorities;
  for (const auto& o : orders) {
    std::vector<StudentId> order;
    for (int s : o) order.push_back(StudentId{s});
    priorities.push_back(SchoolPriority::from_order(std::move(order)));
  }
  return Instance(n, m, std::move(capacities), std::move(profile), std::move(priorities));
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform_index(i)]);
}

inline PreferenceList random_list(int m, Rng& rng) {
  PreferenceList list(m);
  for (int j = 0; j < m; ++j) list[j] = SchoolId{j};
  shuffle(list, rng);
  return list;
}

// Uniformly random preferences, random capacities summing to n, and
// priorities with random classes in 1..4 and a random strict order inside
// each class.
inline Instance random_instance(int n, int m, Rng& rng) {
  Profile prefs;
  for (int i = 0; i < n; ++i) prefs.push_back(random_list(m, rng));
  std::vector<SchoolPriority> priorities;
  for (int j = 0; j < m; ++j) {
    std::vector<int> classes(n);
    for (int& c : classes) c = 1 + static_cast<int>(rng.uniform_index(4));
    std::vector<StudentId> order(n);
    for (int i = 0; i < n; ++i) order[i] = StudentId{i};
    shuffle(order, rng);
    std::stable_sort(order.begin(), order.end(),
                     [&](StudentId a, StudentId b) { return classes[a.index] < classes[b.index]; });
    priorities.emplace_back(std::move(classes), std::move(order));
  }
  auto capacities = generate_capacities(rng, n, m);
  return Instance(n, m, std::move(capacities), std::move(prefs), std::move(priorities));
}

inline int true_rank(const Instance& inst, StudentId s, SchoolId b) {
  const auto& list = inst.true_prefs(s);
  for (int r = 0; r < static_cast<int>(list.size()); ++r) {
    if (list[r] == b) return r + 1;
  }
  return -1;
}

}  // namespace schoolchoice::testing
