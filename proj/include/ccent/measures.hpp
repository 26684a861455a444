#pragma once

#include <optional>
#include <string_view>

#include "ccent/canonical.hpp"
#include "ccent/centrality.hpp"
#include "ccent/condorcet.hpp"
#include "ccent/random_walk.hpp"

namespace ccent {

enum class Measure {
  Closeness,
  Degree,
  Harmonic,
  Decay,
  Eccentricity,
  RwCloseness,
  WMeasure,
  LeafZeroedCloseness,
};

inline Rational default_decay_delta() { return Rational(4, 5); }

std::optional<Measure> measure_from_name(std::string_view name);
std::string_view measure_name(Measure m);

// Computes any measure; delta only matters for Decay.
ScoreVector compute_measure(const Graph& g, Measure m, const Rational& delta);

// True when the measure is a function of the distance-count list alone.
bool is_distance_based(Measure m);

// The f(counts) form of a distance-based measure; throws for the others.
ListFunctional measure_functional(Measure m, const Rational& delta);

// Winner / weak winners / cycle plus one consistency verdict per measure.
CondorcetReport build_condorcet_report(const Graph& g,
                                       const Rational& delta = default_decay_delta());

}  // namespace ccent
