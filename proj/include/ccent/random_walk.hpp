#pragma once

#include <vector>

#include "ccent/centrality.hpp"
#include "ccent/graph.hpp"
#include "ccent/rational.hpp"

namespace ccent {

// Exact expected step counts H(u,v) of the simple random walk, row u = start,
// column v = target.
class HittingMatrix {
 public:
  HittingMatrix() = default;
  explicit HittingMatrix(int n) : n_(n), h_(static_cast<size_t>(n) * n) {}

  int node_count() const { return n_; }
  const Rational& at(int u, int v) const {
    return h_[static_cast<size_t>(u) * n_ + v];
  }
  Rational& at(int u, int v) { return h_[static_cast<size_t>(u) * n_ + v]; }

  // Sum of H(u, v) over all starts u — the inverse RW-closeness of v.
  Rational column_sum(int v) const;

 private:
  int n_ = 0;
  std::vector<Rational> h_;
};

// One exact linear solve per target (Gaussian elimination over rationals);
// targets are independent, so the default runs them under OpenMP.
// Requires a connected graph with n >= 2.
HittingMatrix hitting_times(const Graph& g);
HittingMatrix hitting_times_serial(const Graph& g);

// 2|E| / deg(v), connected graphs only.
Rational expected_return_time(const Graph& g, int v);

// 1 / sum of hitting times into v; the return time is not part of the sum.
ScoreVector rw_closeness(const Graph& g);
ScoreVector rw_closeness(const Graph& g, const HittingMatrix& hitting);

// Closed form for RWC_v^{-1} - RWC_u^{-1} across a tree edge {u,v}:
// (|S_u| - |S_v|) * (2n - 1).
Rational tree_rwc_bridge_gap(const Graph& g, int u, int v);

// Closed form across any bridge {u,v} of a connected graph:
// |S_u| (2 E[S_u] + 1) - |S_v| (2 E[S_v] + 1), with E[S] the edge count of
// the induced side.
Rational general_bridge_gap(const Graph& g, int u, int v);

}  // namespace ccent
