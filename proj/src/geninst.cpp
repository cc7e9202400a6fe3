#include "schoolchoice/geninst.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

namespace schoolchoice {

namespace {

constexpr double kSumTolerance = 1e-9;
const double kUnitSquareDiameter = std::sqrt(2.0);

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void GenConfig::validate() const {
  if (m < 1) throw ConfigError("need at least one school, got m=" + std::to_string(m));
  if (n < m) {
    throw ConfigError("need at least as many students as schools, got n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
  }
  const double w[] = {weights.distance, weights.sibling, weights.tier, weights.random};
  for (double x : w) {
    if (!(x >= 0.0)) throw ConfigError("feature weights must be non-negative");
  }
  if (std::abs(w[0] + w[1] + w[2] + w[3] - 1.0) > kSumTolerance) {
    throw ConfigError("feature weights must sum to 1");
  }
  if (!in_unit_interval(sibling_prob)) throw ConfigError("sibling probability must lie in [0,1]");
  double tier_total = 0.0;
  for (double p : tier_probs) {
    if (!(p >= 0.0)) throw ConfigError("tier probabilities must be non-negative");
    tier_total += p;
  }
  if (std::abs(tier_total - 1.0) > kSumTolerance) throw ConfigError("tier probabilities must sum to 1");
  if (priority_bins.size() < 2 || priority_bins.front() != 0.0 || priority_bins.back() != 1.0) {
    throw ConfigError("priority bins must run from 0 to 1");
  }
  for (std::size_t i = 1; i < priority_bins.size(); ++i) {
    if (!(priority_bins[i] > priority_bins[i - 1])) {
      throw ConfigError("priority bins must be strictly increasing");
    }
  }
}

Point sample_point(Rng& rng) {
  Point p;
  p.x = rng.uniform01();
  p.y = rng.uniform01();
  return p;
}

double distance(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

double normalized_distance(const Point& p, const Point& q) {
  return std::min(1.0, distance(p, q) / kUnitSquareDiameter);
}

double student_pref_value(double dist_norm, int sibling_at_school, int tier, double rand,
                          const FeatureWeights& weights) {
  if (!in_unit_interval(dist_norm)) throw std::domain_error("distance feature outside [0,1]");
  if (sibling_at_school != 0 && sibling_at_school != 1) {
    throw std::domain_error("sibling indicator must be 0 or 1");
  }
  if (tier < 1 || tier > 4) throw std::domain_error("school tier must be in 1..4");
  if (!in_unit_interval(rand)) throw std::domain_error("random factor outside [0,1]");
  return weights.distance * dist_norm + weights.sibling * (1 - sibling_at_school) +
         weights.tier * (tier - 1) / 3.0 + weights.random * rand;
}

PreferenceList ranking_from_scores(std::span<const double> scores) {
  PreferenceList list(scores.size());
  for (std::size_t j = 0; j < scores.size(); ++j) list[j] = SchoolId{static_cast<int>(j)};
  std::stable_sort(list.begin(), list.end(),
                   [&](SchoolId a, SchoolId b) { return scores[a.index] < scores[b.index]; });
  return list;
}

Profile build_student_prefs(const Provenance& features, const FeatureWeights& weights, Rng& rng) {
  const auto n = features.student_positions.size();
  const auto m = features.school_positions.size();
  Profile prefs;
  prefs.reserve(n);
  std::vector<double> scores(m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& sibling = features.sibling_school[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double dist_norm =
          normalized_distance(features.student_positions[i], features.school_positions[j]);
      const int has_sibling = sibling && sibling->index == static_cast<int>(j) ? 1 : 0;
      scores[j] = student_pref_value(dist_norm, has_sibling, features.school_tiers[j], rng.uniform01(),
                                     weights);
    }
    prefs.push_back(ranking_from_scores(scores));
  }
  return prefs;
}

int priority_class(double value, std::span<const double> bins) {
  const int classes = static_cast<int>(bins.size()) - 1;
  for (int c = 1; c < classes; ++c) {
    if (value < bins[c]) return c;
  }
  return classes;
}

std::vector<SchoolPriority> build_school_priorities(std::span<const Point> student_positions,
                                                    std::span<const Point> school_positions,
                                                    std::span<const double> bins, Rng& rng) {
  const int n = static_cast<int>(student_positions.size());
  std::vector<SchoolPriority> priorities;
  priorities.reserve(school_positions.size());
  std::vector<int> classes(n);
  std::vector<double> keys(n);
  for (const Point& school : school_positions) {
    for (int i = 0; i < n; ++i) {
      classes[i] = priority_class(normalized_distance(school, student_positions[i]), bins);
      keys[i] = rng.uniform01();
    }
    std::vector<StudentId> order(n);
    for (int i = 0; i < n; ++i) order[i] = StudentId{i};
    std::sort(order.begin(), order.end(), [&](StudentId a, StudentId b) {
      if (classes[a.index] != classes[b.index]) return classes[a.index] < classes[b.index];
      if (keys[a.index] != keys[b.index]) return keys[a.index] < keys[b.index];
      return a.index < b.index;
    });
    priorities.emplace_back(classes, std::move(order));
  }
  return priorities;
}

std::vector<int> generate_capacities(Rng& rng, int n, int m) {
  if (m < 1) throw ConfigError("capacities need at least one school");
  if (n < m) {
    throw ConfigError("cannot give each of " + std::to_string(m) + " schools a seat with only " +
                      std::to_string(n) + " students");
  }
  std::vector<int> capacities(m, 1);
  for (int seat = m; seat < n; ++seat) ++capacities[rng.uniform_index(m)];
  return capacities;
}

Instance build_instance(const GenConfig& cfg, Rng& rng) {
  cfg.validate();
  Provenance features;
  features.student_positions.reserve(cfg.n);
  for (int i = 0; i < cfg.n; ++i) features.student_positions.push_back(sample_point(rng));
  features.school_positions.reserve(cfg.m);
  for (int j = 0; j < cfg.m; ++j) features.school_positions.push_back(sample_point(rng));

  features.sibling_school.resize(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    if (rng.bernoulli(cfg.sibling_prob)) {
      features.sibling_school[i] = SchoolId{static_cast<int>(rng.uniform_index(cfg.m))};
    }
  }

  features.school_tiers.resize(cfg.m);
  for (int j = 0; j < cfg.m; ++j) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    int tier = static_cast<int>(cfg.tier_probs.size());
    for (int t = 0; t < static_cast<int>(cfg.tier_probs.size()); ++t) {
      cumulative += cfg.tier_probs[t];
      if (u < cumulative) {
        tier = t + 1;
        break;
      }
    }
    features.school_tiers[j] = tier;
  }

  Profile prefs = build_student_prefs(features, cfg.weights, rng);
  auto priorities =
      build_school_priorities(features.student_positions, features.school_positions, cfg.priority_bins, rng);
  auto capacities = generate_capacities(rng, cfg.n, cfg.m);
  return Instance(cfg.n, cfg.m, std::move(capacities), std::move(prefs), std::move(priorities),
                  std::move(features));
}

namespace {

template <typename T, typename F>
void write_line(std::ostream& out, const std::vector<T>& items, F&& value_of) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << ' ';
    out << value_of(items[i]);
  }
  out << '\n';
}

std::vector<int> read_ints(std::istream& in, int count, const char* what) {
  std::vector<int> values(count);
  for (int& v : values) {
    if (!(in >> v)) throw std::runtime_error(std::string("instance dump: truncated ") + what);
  }
  return values;
}

}  // namespace

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.n() << ' ' << inst.m() << '\n';
  write_line(out, inst.capacities(), [](int q) { return q; });
  for (const auto& list : inst.true_prefs()) write_line(out, list, [](SchoolId b) { return b.index; });
  for (const auto& pr : inst.priorities()) {
    write_line(out, pr.strict_order(), [](StudentId s) { return s.index; });
  }
  for (const auto& pr : inst.priorities()) write_line(out, pr.classes(), [](int c) { return c; });
}

Instance read_instance(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m) || n < 1 || m < 1) throw std::runtime_error("instance dump: bad header");
  auto capacities = read_ints(in, m, "capacities");
  Profile prefs(n);
  for (auto& list : prefs) {
    for (int b : read_ints(in, m, "preference line")) list.push_back(SchoolId{b});
  }
  std::vector<std::vector<StudentId>> orders(m);
  for (auto& order : orders) {
    for (int s : read_ints(in, n, "priority line")) order.push_back(StudentId{s});
  }
  std::vector<SchoolPriority> priorities;
  priorities.reserve(m);
  for (int j = 0; j < m; ++j) {
    try {
      priorities.emplace_back(read_ints(in, n, "class line"), std::move(orders[j]));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("instance dump: ") + e.what());
    }
  }
  try {
    return Instance(n, m, std::move(capacities), std::move(prefs), std::move(priorities));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("instance dump: ") + e.what());
  }
}

}  // namespace schoolchoice
