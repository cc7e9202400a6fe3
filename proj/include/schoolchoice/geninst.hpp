#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "schoolchoice/model.hpp"
#include "schoolchoice/rng.hpp"

namespace schoolchoice {

// Invalid generator or sweep parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FeatureWeights {
  double distance = 0.5;
  double sibling = 0.2;
  double tier = 0.2;
  double random = 0.1;
};

struct GenConfig {
  int n = 2000;
  int m = 20;
  FeatureWeights weights;
  double sibling_prob = 0.5;
  // Probability of tiers 1..4.
  std::array<double, 4> tier_probs = {0.1, 0.2, 0.3, 0.4};
  // Boundaries of the school-side priority classes; k+1 values give k classes.
  std::vector<double> priority_bins = {0.0, 0.3, 0.5, 0.7, 1.0};

  // Throws ConfigError on the first broken invariant.
  void validate() const;
};

Point sample_point(Rng& rng);

double distance(const Point& p, const Point& q);

// Distance scaled by the diameter of the unit square, so it lies in [0, 1].
double normalized_distance(const Point& p, const Point& q);

// Weighted preference score; lower is better. Features must already be
// normalized: dist_norm and rand in [0,1], sibling_at_school in {0,1},
// tier in 1..4. Throws std::domain_error otherwise.
double student_pref_value(double dist_norm, int sibling_at_school, int tier, double rand,
                          const FeatureWeights& weights);

// Schools sorted by ascending score, ties by ascending index.
PreferenceList ranking_from_scores(std::span<const double> scores);

// Draws one random factor per (student, school), student-major, and ranks
// every school for every student.
Profile build_student_prefs(const Provenance& features, const FeatureWeights& weights, Rng& rng);

// Left-closed bins with the last bin closed: value v falls in class c
// (1-based) when bins[c-1] <= v < bins[c]; values at or past the last
// boundary take the last class.
int priority_class(double value, std::span<const double> bins);

// One priority per school from normalized distances; ties inside a class are
// broken by a fresh uniform key per (school, student), school-major.
std::vector<SchoolPriority> build_school_priorities(std::span<const Point> student_positions,
                                                    std::span<const Point> school_positions,
                                                    std::span<const double> bins, Rng& rng);

// One guaranteed seat per school, the remaining n - m seats each go to a
// uniformly random school. Throws ConfigError when n < m or m < 1.
std::vector<int> generate_capacities(Rng& rng, int n, int m);

Instance build_instance(const GenConfig& cfg, Rng& rng);

// Plain-text dump: "n m", capacities, n preference lines, m strict priority
// lines, m class lines (classes in student id order).
void write_instance(std::ostream& out, const Instance& inst);
// Inverse of write_instance (provenance is not stored). Throws
// std::runtime_error on malformed input.
Instance read_instance(std::istream& in);

}  // namespace schoolchoice
