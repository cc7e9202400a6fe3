#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "schoolchoice/model.hpp"

namespace schoolchoice {

enum class Mechanism { kBoston, kDeferredAcceptance };

// "boston" / "da".
std::string_view mechanism_name(Mechanism mech);

struct BostonOutcome {
  Matching matching;
  // 1-based round in which each student was admitted.
  std::vector<int> admitted_round;
};

// Immediate acceptance. In round k every still-unassigned student applies to
// the k-th school on their reported list; each school admits applicants in
// priority order up to its remaining seats, and admissions are final.
// Throws std::domain_error if `reported` is not a full profile of
// permutations.
BostonOutcome boston_with_rounds(const Instance& inst, const Profile& reported);
Matching boston(const Instance& inst, const Profile& reported);

// Student-proposing deferred acceptance with quotas. Unassigned students are
// served from a FIFO worklist seeded in ascending id order.
Matching deferred_acceptance(const Instance& inst, const Profile& reported);

// Same, with the initial worklist given explicitly (a permutation of all
// students). The result does not depend on this order.
Matching deferred_acceptance(const Instance& inst, const Profile& reported,
                             std::span<const StudentId> proposal_order);

Matching run_mechanism(Mechanism mech, const Instance& inst, const Profile& reported);

}  // namespace schoolchoice
