#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ccent/graph.hpp"
#include "ccent/rational.hpp"

namespace ccent {

// One exact score per node plus the metadata needed to reproduce it.
struct ScoreVector {
  std::string measure;
  std::map<std::string, std::string> params;
  std::vector<Rational> values;
};

// Descending tie groups; ids ascending within a group.  The first group is
// the top set.
struct Ranking {
  std::vector<std::vector<int>> groups;
};

// 1 / sum of distances.  Requires a connected graph with n >= 2.
ScoreVector closeness(const Graph& g);
ScoreVector degree(const Graph& g);
// Sum of 1/d with the zero-contribution convention for unreachable nodes.
ScoreVector harmonic(const Graph& g);
// Sum of delta^d for rational delta in (0,1); unreachable contributes zero.
ScoreVector decay(const Graph& g, const Rational& delta);
// 1 / max distance.  Connected, n >= 2.
ScoreVector eccentricity(const Graph& g);
// Closeness for internal nodes, zero for leaves.
ScoreVector leaf_zeroed_closeness(const Graph& g);

Ranking rank(const ScoreVector& scores);
std::vector<int> top_set(const ScoreVector& scores);

// True iff the two vectors order every node pair identically.
bool same_ranking(const ScoreVector& a, const ScoreVector& b);

// ---- list-level forms -------------------------------------------------------
//
// Every measure above except leaf handling depends only on the list of
// distance counts, so each has an f(counts) form used for list-level
// reasoning and as the second route in equivalence checks.

Rational closeness_of_list(std::span<const int64_t> counts);
Rational degree_of_list(std::span<const int64_t> counts);
Rational harmonic_of_list(std::span<const int64_t> counts);
Rational decay_of_list(std::span<const int64_t> counts, const Rational& delta);
Rational eccentricity_of_list(std::span<const int64_t> counts);
Rational leaf_zeroed_closeness_of_list(std::span<const int64_t> counts);

}  // namespace ccent
