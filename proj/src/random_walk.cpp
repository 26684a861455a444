#include "ccent/random_walk.hpp"

#include <stdexcept>
#include <utility>

namespace ccent {

namespace {

void require_connected_n2(const Graph& g, const char* what) {
  if (g.node_count() < 2)
    throw std::invalid_argument(std::string(what) + " needs at least two nodes");
  if (!is_connected(g))
    throw std::invalid_argument(std::string(what) + " is undefined on disconnected graphs");
}

// Hitting times into `target`: for u != target,
//   deg(u) H(u) - sum_{w ~ u, w != target} H(w) = deg(u).
// Solved by exact Gaussian elimination on the (n-1)x(n-1) system.
void solve_target(const Graph& g, int target, HittingMatrix& out) {
  const int n = g.node_count();
  const int m = n - 1;
  std::vector<int> nodes;  // row index -> node id
  nodes.reserve(m);
  std::vector<int> row_of(n, -1);
  for (int u = 0; u < n; ++u)
    if (u != target) {
      row_of[u] = static_cast<int>(nodes.size());
      nodes.push_back(u);
    }

  // augmented matrix [A | b]
  std::vector<Rational> a(static_cast<size_t>(m) * (m + 1));
  auto at = [&](int r, int c) -> Rational& {
    return a[static_cast<size_t>(r) * (m + 1) + c];
  };
  for (int r = 0; r < m; ++r) {
    int u = nodes[r];
    at(r, r) = g.degree(u);
    at(r, m) = g.degree(u);
    for (int w : g.neighbors(u))
      if (w != target) at(r, row_of[w]) -= 1;
  }

  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (sgn(at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular hitting-time system");
    if (pivot != col)
      for (int c = col; c <= m; ++c) swap(at(col, c), at(pivot, c));
    const Rational inv_piv = 1 / at(col, col);
    for (int r = col + 1; r < m; ++r) {
      if (sgn(at(r, col)) == 0) continue;
      const Rational factor = at(r, col) * inv_piv;
      at(r, col) = 0;
      for (int c = col + 1; c <= m; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  for (int r = m - 1; r >= 0; --r) {
    Rational sum = at(r, m);
    for (int c = r + 1; c < m; ++c) sum -= at(r, c) * at(c, m);
    at(r, m) = sum / at(r, r);
  }

  for (int r = 0; r < m; ++r) out.at(nodes[r], target) = std::move(at(r, m));
}

}  // namespace

Rational HittingMatrix::column_sum(int v) const {
  Rational sum = 0;
  for (int u = 0; u < n_; ++u) sum += at(u, v);
  return sum;
}

HittingMatrix hitting_times(const Graph& g) {
  require_connected_n2(g, "hitting_times");
  const int n = g.node_count();
  HittingMatrix out(n);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) solve_target(g, v, out);
  return out;
}

HittingMatrix hitting_times_serial(const Graph& g) {
  require_connected_n2(g, "hitting_times");
  const int n = g.node_count();
  HittingMatrix out(n);
  for (int v = 0; v < n; ++v) solve_target(g, v, out);
  return out;
}

Rational expected_return_time(const Graph& g, int v) {
  if (!is_connected(g))
    throw std::invalid_argument("return time is undefined on disconnected graphs");
  if (g.degree(v) == 0) throw std::invalid_argument("isolated node has no return time");
  return make_rational(2 * g.edge_count(), g.degree(v));
}

ScoreVector rw_closeness(const Graph& g) {
  require_connected_n2(g, "rw_closeness");
  return rw_closeness(g, hitting_times(g));
}

ScoreVector rw_closeness(const Graph& g, const HittingMatrix& hitting) {
  require_connected_n2(g, "rw_closeness");
  ScoreVector out;
  out.measure = "rwc";
  out.values.reserve(g.node_count());
  for (int v = 0; v < g.node_count(); ++v)
    out.values.push_back(1 / hitting.column_sum(v));
  return out;
}

Rational tree_rwc_bridge_gap(const Graph& g, int u, int v) {
  if (!is_tree(g)) throw std::invalid_argument("tree_rwc_bridge_gap requires a tree");
  if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
  BridgeSplit split = bridge_split(g, u, v);
  const int64_t n = g.node_count();
  return Rational((static_cast<int64_t>(split.side_u.size()) -
                   static_cast<int64_t>(split.side_v.size())) *
                  (2 * n - 1));
}

Rational general_bridge_gap(const Graph& g, int u, int v) {
  if (!is_connected(g))
    throw std::invalid_argument("general_bridge_gap requires a connected graph");
  BridgeSplit split = bridge_split(g, u, v);  // throws when not a bridge
  auto side_term = [&](const std::vector<int>& side) {
    int64_t sz = static_cast<int64_t>(side.size());
    int64_t edges = g.induced(side).edge_count();
    return sz * (2 * edges + 1);
  };
  return Rational(side_term(split.side_u) - side_term(split.side_v));
}

}  // namespace ccent
