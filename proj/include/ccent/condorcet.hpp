#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccent/centrality.hpp"
#include "ccent/graph.hpp"

namespace ccent {

// net(u,v) = number of nodes strictly closer to u than to v.  Defined on
// connected graphs only; nodes equidistant to both count for neither side.
class PreferenceMatrix {
 public:
  PreferenceMatrix() = default;
  explicit PreferenceMatrix(int n) : n_(n), net_(static_cast<size_t>(n) * n) {}

  int node_count() const { return n_; }
  int32_t at(int u, int v) const { return net_[static_cast<size_t>(u) * n_ + v]; }
  int32_t& at(int u, int v) { return net_[static_cast<size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int32_t> net_;
};

enum class Preference { FirstPreferred, Tie, SecondPreferred };

PreferenceMatrix preference_matrix(const Graph& g);  // OpenMP over rows
PreferenceMatrix preference_matrix_serial(const Graph& g);
PreferenceMatrix preference_matrix(const Graph& g, const DistanceMatrix& dist);

// Head-to-head verdict between two distinct nodes.
Preference compare(const PreferenceMatrix& pm, int u, int v);

// The node beating every other node head-to-head, if any.
std::optional<int> condorcet_winner(const PreferenceMatrix& pm);

// For trees without a winner: the adjacent tied pair that beats everyone
// else.  Absent exactly when a winner exists.
std::optional<std::pair<int, int>> weak_condorcet_winners(
    const Graph& g, const PreferenceMatrix& pm);

// Any cycle v_1 > v_2 > ... > v_k > v_1 in the strict-preference digraph.
std::optional<std::vector<int>> find_condorcet_cycle(const PreferenceMatrix& pm);

// Distance from v to the winner (or to the closer weak winner).  Trees only.
int level(const Graph& g, const PreferenceMatrix& pm, int v);

// ---- structural route for trees ---------------------------------------------
//
// Precomputes distances, per-root parents and all subtree sizes |T_u^v| for
// one tree, then answers the tree-specific queries without ever counting
// votes.  Winner location uses edge splits only, so everything derived here
// is an independent route against the Net-based operations.

class TreeContext {
 public:
  explicit TreeContext(const Graph& g);  // throws if g is not a tree

  const Graph& graph() const { return *g_; }
  int node_count() const { return n_; }

  int dist(int u, int v) const { return dist_[idx(u, v)]; }
  // |T_u^v|: size of the subtree hanging off u when rooted at v; the whole
  // tree when u == v, which keeps the middle-node rule uniform for adjacent
  // arguments.
  int64_t subtree(int u, int v) const { return size_[idx(v, u)]; }
  // neighbor of u on the path toward v (u != v)
  int step_toward(int u, int v) const { return parent_[idx(v, u)]; }

  std::optional<int> winner() const { return winner_; }
  std::optional<std::pair<int, int>> weak_pair() const { return weak_pair_; }
  int level(int v) const { return level_[v]; }

 private:
  size_t idx(int root, int u) const {
    return static_cast<size_t>(root) * n_ + u;
  }
  const Graph* g_;
  int n_;
  std::vector<int32_t> dist_;    // dist_[root*n+u] = d(root, u)
  std::vector<int32_t> parent_;  // parent_[root*n+u] = next node from u to root
  std::vector<int32_t> size_;    // size_[root*n+u] = |T_u^root|
  std::optional<int> winner_;
  std::optional<std::pair<int, int>> weak_pair_;
  std::vector<int32_t> level_;
};

// Verdict from levels and middle-node subtree sizes only.  Agrees with
// compare() on every tree; the suites check that exhaustively.
Preference tree_compare_structural(const TreeContext& t, int u, int v);
Preference tree_compare_structural(const Graph& g, int u, int v);

// Subtree sizes along the path to the winner that exceed n/2, ascending.
struct LtList {
  std::vector<int64_t> values;
};

LtList lt_list(const TreeContext& t, int v);
LtList lt_list(const Graph& g, int v);

// Shorter list first; equal lengths compare lexicographically.
std::strong_ordering shortlex_compare(const LtList& a, const LtList& b);

// W_v = 1 when the majority list is empty, otherwise
// 1 / (sum_i t_i * n^(k+1-i)).  Ranks exactly by shortlex order of LtLists.
ScoreVector w_measure(const Graph& g);
ScoreVector w_measure(const TreeContext& t);

// ---- axiom checkers -----------------------------------------------------------

// An adjacent (or general) pair where the head-to-head verdict and the score
// order disagree; signs are -1/0/+1 for net(u,v)-net(v,u) and F_u-F_v.
struct EdgeComparisonViolation {
  int u, v;
  int net_sign;
  int score_sign;
};

// Condorcet comparison over every edge: u >= v iff F_u >= F_v.
std::vector<EdgeComparisonViolation> check_cc(const Graph& g,
                                              const ScoreVector& scores);
std::vector<EdgeComparisonViolation> check_cc(const Graph& g,
                                              const PreferenceMatrix& pm,
                                              const ScoreVector& scores);

// Across every bridge, the node on the strictly larger side must score
// strictly higher; equal sides impose nothing.
struct BridgeViolation {
  int u, v;
  int64_t side_u, side_v;
  int score_sign;
};

std::vector<BridgeViolation> check_bridge_axiom(const Graph& g,
                                                const ScoreVector& scores);

// Winner exists but the top set is not exactly {winner}.
struct ConsistencyViolation {
  int winner;
  std::vector<int> top;
};

std::optional<ConsistencyViolation> check_condorcet_consistency(
    const Graph& g, const ScoreVector& scores);
std::optional<ConsistencyViolation> check_condorcet_consistency(
    const PreferenceMatrix& pm, const ScoreVector& scores);

// Trees, all ordered pairs: u > v must imply F_u > F_v.
std::vector<EdgeComparisonViolation> check_weak_general_cct(
    const Graph& g, const ScoreVector& scores);

// ---- election summary -----------------------------------------------------------

struct CondorcetReport {
  std::optional<int> winner;
  std::optional<std::pair<int, int>> weak_winners;  // trees only
  std::optional<std::vector<int>> cycle;            // only searched when no winner
  std::vector<std::pair<std::string, std::string>> consistency;
};

}  // namespace ccent
