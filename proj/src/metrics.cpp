#include "schoolchoice/metrics.hpp"

namespace schoolchoice {

namespace {

template <typename Pred>
double percentage_of(std::span<const StudentId> soph, Pred&& pred) {
  if (soph.empty()) return 0.0;
  std::size_t hits = 0;
  for (StudentId s : soph) {
    if (pred(s)) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(soph.size());
}

}  // namespace

double em_higher(const Matching& baseline, const Matching& altered, std::span<const StudentId> soph,
                 const Profile& true_prefs) {
  return percentage_of(soph, [&](StudentId s) {
    const auto& list = true_prefs[s.index];
    return rank_of(list, altered.school_of(s)) < rank_of(list, baseline.school_of(s));
  });
}

double em_top3(const Matching& baseline, const Matching& altered, std::span<const StudentId> soph,
               const Profile& true_prefs) {
  return percentage_of(soph, [&](StudentId s) {
    const auto& list = true_prefs[s.index];
    return rank_of(list, altered.school_of(s)) <= 3 && rank_of(list, baseline.school_of(s)) > 3;
  });
}

double em_selected(const Matching& matching, std::span<const StudentId> soph, SchoolId selected) {
  return percentage_of(soph, [&](StudentId s) { return matching.school_of(s) == selected; });
}

}  // namespace schoolchoice
