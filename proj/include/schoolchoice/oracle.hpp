#pragma once

#include <utility>
#include <vector>

#include "schoolchoice/mechanisms.hpp"
#include "schoolchoice/model.hpp"

namespace schoolchoice {

// Brute-force checkers. None of them reuse mechanism internals; priority
// positions are recomputed from the strict orders.

// Every (student, school) pair where the student strictly prefers the school
// to its match under `reported` and the school has a free seat or ranks the
// student above someone on its roster. Sorted by (student, school); empty
// iff the matching is stable.
std::vector<std::pair<StudentId, SchoolId>> find_blocking_pairs(const Instance& inst, const Profile& reported,
                                                                const Matching& matching);

struct BestResponse {
  SchoolId best_school;
  int best_true_rank;
  // First list, in lexicographic order of school ids, achieving best_school.
  PreferenceList witness;
};

constexpr int kMaxEnumerationSchools = 6;

// Runs `mech` once per possible list for `student` (everyone else truthful)
// and keeps the outcome ranked highest on the student's true list. Throws
// std::length_error when m exceeds kMaxEnumerationSchools.
BestResponse exhaustive_best_response(const Instance& inst, Mechanism mech, StudentId student);

struct WitnessCase {
  Instance instance;
  StudentId student;
  PreferenceList misreport;
  int truthful_rank;     // true rank of the student's Boston school when truthful
  int manipulated_rank;  // true rank after the misreport
};

// Three students, three unit-capacity schools, where student 1 gains one
// rank under Boston by ranking school 1 first.
WitnessCase witness_instance();

}  // namespace schoolchoice
