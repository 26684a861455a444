#include "ccent/measures.hpp"

#include <stdexcept>

namespace ccent {

std::optional<Measure> measure_from_name(std::string_view name) {
  if (name == "closeness") return Measure::Closeness;
  if (name == "degree") return Measure::Degree;
  if (name == "harmonic") return Measure::Harmonic;
  if (name == "decay") return Measure::Decay;
  if (name == "eccentricity") return Measure::Eccentricity;
  if (name == "rwc") return Measure::RwCloseness;
  if (name == "w") return Measure::WMeasure;
  if (name == "x") return Measure::LeafZeroedCloseness;
  return std::nullopt;
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Closeness: return "closeness";
    case Measure::Degree: return "degree";
    case Measure::Harmonic: return "harmonic";
    case Measure::Decay: return "decay";
    case Measure::Eccentricity: return "eccentricity";
    case Measure::RwCloseness: return "rwc";
    case Measure::WMeasure: return "w";
    case Measure::LeafZeroedCloseness: return "x";
  }
  throw std::logic_error("unknown measure");
}

ScoreVector compute_measure(const Graph& g, Measure m, const Rational& delta) {
  switch (m) {
    case Measure::Closeness: return closeness(g);
    case Measure::Degree: return degree(g);
    case Measure::Harmonic: return harmonic(g);
    case Measure::Decay: return decay(g, delta);
    case Measure::Eccentricity: return eccentricity(g);
    case Measure::RwCloseness: return rw_closeness(g);
    case Measure::WMeasure: return w_measure(g);
    case Measure::LeafZeroedCloseness: return leaf_zeroed_closeness(g);
  }
  throw std::logic_error("unknown measure");
}

bool is_distance_based(Measure m) {
  return m != Measure::RwCloseness && m != Measure::WMeasure;
}

ListFunctional measure_functional(Measure m, const Rational& delta) {
  switch (m) {
    case Measure::Closeness:
      return [](std::span<const int64_t> a) { return closeness_of_list(a); };
    case Measure::Degree:
      return [](std::span<const int64_t> a) { return degree_of_list(a); };
    case Measure::Harmonic:
      return [](std::span<const int64_t> a) { return harmonic_of_list(a); };
    case Measure::Decay:
      return [delta](std::span<const int64_t> a) { return decay_of_list(a, delta); };
    case Measure::Eccentricity:
      return [](std::span<const int64_t> a) { return eccentricity_of_list(a); };
    case Measure::LeafZeroedCloseness:
      return [](std::span<const int64_t> a) {
        return leaf_zeroed_closeness_of_list(a);
      };
    default:
      throw std::invalid_argument("measure has no distance-list form");
  }
}

CondorcetReport build_condorcet_report(const Graph& g, const Rational& delta) {
  CondorcetReport report;
  PreferenceMatrix pm = preference_matrix(g);
  report.winner = condorcet_winner(pm);
  const bool tree = is_tree(g);
  if (tree) report.weak_winners = weak_condorcet_winners(g, pm);
  if (!report.winner) report.cycle = find_condorcet_cycle(pm);

  auto verdict_for = [&](Measure m) {
    ScoreVector scores = compute_measure(g, m, delta);
    if (!report.winner) return std::string("no-winner");
    auto violation = check_condorcet_consistency(pm, scores);
    return std::string(violation ? "violation" : "consistent");
  };
  for (Measure m : {Measure::Closeness, Measure::Degree, Measure::Harmonic,
                    Measure::Decay, Measure::Eccentricity, Measure::RwCloseness,
                    Measure::LeafZeroedCloseness}) {
    report.consistency.emplace_back(measure_name(m), verdict_for(m));
  }
  if (tree) report.consistency.emplace_back("w", verdict_for(Measure::WMeasure));
  return report;
}

}  // namespace ccent
