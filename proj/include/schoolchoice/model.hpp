#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schoolchoice {

struct StudentId {
  std::int32_t index = 0;
  friend auto operator<=>(const StudentId&, const StudentId&) = default;
};

struct SchoolId {
  std::int32_t index = 0;
  friend auto operator<=>(const SchoolId&, const SchoolId&) = default;
};

// Rank 1 is the most preferred school; position 0 of the ranking holds it.
using PreferenceList = std::vector<SchoolId>;
using Profile = std::vector<PreferenceList>;

// True iff `list` holds every school id in [0, m) exactly once.
bool is_permutation_of_schools(std::span<const SchoolId> list, int m);

// 1-based rank of `school` in `list`. Throws std::domain_error if the id is
// outside [0, list.size()) or missing from the list.
int rank_of(std::span<const SchoolId> list, SchoolId school);

// A school's view of the students: coarse priority classes (1 = highest) and
// a strict tie-broken order consistent with them.
class SchoolPriority {
 public:
  SchoolPriority() = default;
  // Throws std::invalid_argument unless strict_order is a permutation of
  // [0, classes.size()) and classes are non-decreasing along it.
  SchoolPriority(std::vector<int> classes, std::vector<StudentId> strict_order);

  // Single-class priority from a strict order alone.
  static SchoolPriority from_order(std::vector<StudentId> strict_order);

  const std::vector<int>& classes() const { return classes_; }
  const std::vector<StudentId>& strict_order() const { return strict_order_; }
  int class_of(StudentId s) const { return classes_[s.index]; }
  // 0-based position in strict_order; smaller means higher priority.
  int position_of(StudentId s) const { return position_[s.index]; }

 private:
  std::vector<int> classes_;
  std::vector<StudentId> strict_order_;
  std::vector<int> position_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Generator inputs kept alongside an instance for debugging.
struct Provenance {
  std::vector<Point> student_positions;
  std::vector<Point> school_positions;
  std::vector<std::optional<SchoolId>> sibling_school;
  std::vector<int> school_tiers;
};

class Instance {
 public:
  // Throws std::invalid_argument when any model invariant fails: sizes,
  // permutation lists, capacities >= 1 summing to n.
  Instance(int n, int m, std::vector<int> capacities, Profile true_prefs,
           std::vector<SchoolPriority> priorities,
           std::optional<Provenance> provenance = std::nullopt);

  int n() const { return n_; }
  int m() const { return m_; }
  int capacity(SchoolId b) const { return capacities_[b.index]; }
  const std::vector<int>& capacities() const { return capacities_; }
  const Profile& true_prefs() const { return true_prefs_; }
  const PreferenceList& true_prefs(StudentId s) const { return true_prefs_[s.index]; }
  const std::vector<SchoolPriority>& priorities() const { return priorities_; }
  const SchoolPriority& priority(SchoolId b) const { return priorities_[b.index]; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

 private:
  int n_;
  int m_;
  std::vector<int> capacities_;
  Profile true_prefs_;
  std::vector<SchoolPriority> priorities_;
  std::optional<Provenance> provenance_;
};

// Student -> school assignment together with its inverse roster.
class Matching {
 public:
  Matching() = default;
  // Stores both directions verbatim; no consistency checks. Use
  // validate_matching to inspect the result.
  Matching(std::vector<SchoolId> assignment, std::vector<std::vector<StudentId>> roster);

  // Builds the roster from a total assignment. Rosters are sorted by id.
  // Throws std::domain_error for a school id outside [0, m).
  static Matching from_assignment(std::vector<SchoolId> assignment, int m);

  SchoolId school_of(StudentId s) const { return assignment_[s.index]; }
  const std::vector<SchoolId>& assignment() const { return assignment_; }
  const std::vector<StudentId>& roster(SchoolId b) const { return roster_[b.index]; }
  const std::vector<std::vector<StudentId>>& rosters() const { return roster_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<SchoolId> assignment_;
  std::vector<std::vector<StudentId>> roster_;
};

struct MatchingViolation {
  enum class Kind { kTotality, kCapacity, kRoster };
  Kind kind;
  // Student id for totality/roster violations, school id for capacity.
  int id;
  std::string message;
};

// Empty optional means the matching is valid. Checks, in order: every
// student has an in-range school, every roster fits its capacity, rosters
// are the exact inverse of the assignment.
std::optional<MatchingViolation> validate_matching(const Instance& inst, const Matching& matching);

}  // namespace schoolchoice
