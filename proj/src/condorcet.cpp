#include "ccent/condorcet.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ccent {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

void require_tree(const Graph& g, const char* what) {
  if (!is_tree(g))
    throw std::invalid_argument(std::string(what) + " requires a tree");
}

}  // namespace

PreferenceMatrix preference_matrix(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.node_count();
  PreferenceMatrix pm(n);
#pragma omp parallel for schedule(static)
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int32_t for_u = 0, for_v = 0;
      for (int w = 0; w < n; ++w) {
        int dw_u = dist.at(w, u).value();
        int dw_v = dist.at(w, v).value();
        if (dw_u < dw_v)
          ++for_u;
        else if (dw_v < dw_u)
          ++for_v;
      }
      pm.at(u, v) = for_u;
      pm.at(v, u) = for_v;
    }
  }
  return pm;
}

PreferenceMatrix preference_matrix(const Graph& g) {
  require_connected(g, "preference_matrix");
  return preference_matrix(g, all_pairs_distances(g));
}

PreferenceMatrix preference_matrix_serial(const Graph& g) {
  require_connected(g, "preference_matrix");
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  const int n = g.node_count();
  PreferenceMatrix pm(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int32_t for_u = 0, for_v = 0;
      for (int w = 0; w < n; ++w) {
        int dw_u = dist.at(w, u).value();
        int dw_v = dist.at(w, v).value();
        if (dw_u < dw_v)
          ++for_u;
        else if (dw_v < dw_u)
          ++for_v;
      }
      pm.at(u, v) = for_u;
      pm.at(v, u) = for_v;
    }
  return pm;
}

Preference compare(const PreferenceMatrix& pm, int u, int v) {
  if (u == v) throw std::invalid_argument("compare needs two distinct nodes");
  int32_t d = pm.at(u, v) - pm.at(v, u);
  if (d > 0) return Preference::FirstPreferred;
  if (d < 0) return Preference::SecondPreferred;
  return Preference::Tie;
}

std::optional<int> condorcet_winner(const PreferenceMatrix& pm) {
  const int n = pm.node_count();
  for (int u = 0; u < n; ++u) {
    bool beats_all = true;
    for (int v = 0; v < n && beats_all; ++v)
      if (v != u && pm.at(u, v) <= pm.at(v, u)) beats_all = false;
    if (beats_all) return u;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> weak_condorcet_winners(
    const Graph& g, const PreferenceMatrix& pm) {
  require_tree(g, "weak_condorcet_winners");
  if (condorcet_winner(pm)) return std::nullopt;
  const int n = g.node_count();
  for (auto [u, v] : g.edges()) {
    if (pm.at(u, v) != pm.at(v, u)) continue;
    bool both_beat_rest = true;
    for (int w = 0; w < n && both_beat_rest; ++w) {
      if (w == u || w == v) continue;
      if (pm.at(u, w) <= pm.at(w, u) || pm.at(v, w) <= pm.at(w, v))
        both_beat_rest = false;
    }
    if (both_beat_rest) return std::pair{u, v};
  }
  throw std::logic_error("tree without winner has no weak winner pair");
}

std::optional<std::vector<int>> find_condorcet_cycle(const PreferenceMatrix& pm) {
  const int n = pm.node_count();
  std::vector<int8_t> color(n, 0);  // 0 unseen, 1 on path, 2 done
  std::vector<int> path;
  std::optional<std::vector<int>> found;
  std::function<bool(int)> dfs = [&](int u) -> bool {
    color[u] = 1;
    path.push_back(u);
    for (int v = 0; v < n; ++v) {
      if (v == u || pm.at(u, v) <= pm.at(v, u)) continue;
      if (color[v] == 1) {
        auto it = std::find(path.begin(), path.end(), v);
        found.emplace(it, path.end());
        return true;
      }
      if (color[v] == 0 && dfs(v)) return true;
    }
    color[u] = 2;
    path.pop_back();
    return false;
  };
  for (int s = 0; s < n && !found; ++s)
    if (color[s] == 0) dfs(s);
  return found;
}

int level(const Graph& g, const PreferenceMatrix& pm, int v) {
  require_tree(g, "level");
  if (auto w = condorcet_winner(pm)) {
    return bfs_distances(g, *w)[v].value();
  }
  auto pair = weak_condorcet_winners(g, pm);
  auto da = bfs_distances(g, pair->first);
  auto db = bfs_distances(g, pair->second);
  return std::min(da[v].value(), db[v].value());
}

// ---- TreeContext ---------------------------------------------------------------

TreeContext::TreeContext(const Graph& g) : g_(&g), n_(g.node_count()) {
  require_tree(g, "TreeContext");
  const size_t nn = static_cast<size_t>(n_) * n_;
  dist_.assign(nn, 0);
  parent_.assign(nn, -1);
  size_.assign(nn, 1);
  std::vector<int32_t> order(n_);
  for (int root = 0; root < n_; ++root) {
    int32_t* dist = dist_.data() + idx(root, 0);
    int32_t* parent = parent_.data() + idx(root, 0);
    int32_t* size = size_.data() + idx(root, 0);
    std::fill(dist, dist + n_, -1);
    dist[root] = 0;
    int head = 0, tail = 0;
    order[tail++] = root;
    while (head < tail) {
      int u = order[head++];
      for (int w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          order[tail++] = w;
        }
    }
    // children accumulate into parents in reverse BFS order
    for (int i = n_ - 1; i >= 1; --i) size[parent[order[i]]] += size[order[i]];
  }

  // winner / weak pair from edge splits alone: an edge splitting the tree
  // evenly names the weak pair; otherwise the unique node with every branch
  // below n/2 wins.
  if (n_ == 1) {
    winner_ = 0;
  } else {
    for (auto [u, v] : g.edges())
      if (2 * subtree(u, v) == n_) {
        weak_pair_ = {u, v};
        break;
      }
    if (!weak_pair_) {
      for (int r = 0; r < n_ && !winner_; ++r) {
        bool all_minor = true;
        for (int u : g.neighbors(r))
          if (2 * subtree(u, r) > n_) {
            all_minor = false;
            break;
          }
        if (all_minor) winner_ = r;
      }
      if (!winner_) throw std::logic_error("tree has neither winner nor weak pair");
    }
  }

  level_.resize(n_);
  for (int v = 0; v < n_; ++v)
    level_[v] = winner_ ? dist(*winner_, v)
                        : std::min(dist(weak_pair_->first, v),
                                   dist(weak_pair_->second, v));
}

namespace {

// u >= v per the level / middle-node criterion.
bool structurally_at_least(const TreeContext& t, int u, int v) {
  if (t.level(u) != t.level(v)) return t.level(u) < t.level(v);
  const int d = t.dist(u, v);
  int w = u;
  for (int step = 0; step < (d + 1) / 2; ++step) w = t.step_toward(w, v);
  return t.subtree(w, u) <= t.subtree(w, v);
}

}  // namespace

Preference tree_compare_structural(const TreeContext& t, int u, int v) {
  if (u == v) throw std::invalid_argument("compare needs two distinct nodes");
  const bool uv = structurally_at_least(t, u, v);
  const bool vu = structurally_at_least(t, v, u);
  if (uv && vu) return Preference::Tie;
  if (uv) return Preference::FirstPreferred;
  if (vu) return Preference::SecondPreferred;
  throw std::logic_error("structural comparison not total");
}

Preference tree_compare_structural(const Graph& g, int u, int v) {
  return tree_compare_structural(TreeContext(g), u, v);
}

LtList lt_list(const TreeContext& t, int v) {
  LtList out;
  const int n = t.node_count();
  for (int u = 0; u < n; ++u)
    if (u != v && 2 * t.subtree(u, v) > n) out.values.push_back(t.subtree(u, v));
  std::sort(out.values.begin(), out.values.end());
  return out;
}

LtList lt_list(const Graph& g, int v) { return lt_list(TreeContext(g), v); }

std::strong_ordering shortlex_compare(const LtList& a, const LtList& b) {
  if (a.values.size() != b.values.size())
    return a.values.size() <=> b.values.size();
  return a.values <=> b.values;
}

ScoreVector w_measure(const Graph& g) { return w_measure(TreeContext(g)); }

ScoreVector w_measure(const TreeContext& t) {
  const int n = t.node_count();
  ScoreVector out;
  out.measure = "w";
  out.values.reserve(n);
  for (int v = 0; v < n; ++v) {
    LtList lt = lt_list(t, v);
    if (lt.values.empty()) {
      out.values.emplace_back(1);
      continue;
    }
    BigInt acc = 0, power = n;
    for (auto it = lt.values.rbegin(); it != lt.values.rend(); ++it) {
      acc += power * static_cast<long>(*it);
      power *= n;
    }
    Rational w(1);
    w /= Rational(acc);
    out.values.push_back(std::move(w));
  }
  return out;
}

// ---- axiom checkers ---------------------------------------------------------------

std::vector<EdgeComparisonViolation> check_cc(const Graph& g,
                                              const PreferenceMatrix& pm,
                                              const ScoreVector& scores) {
  if (static_cast<int>(scores.values.size()) != g.node_count())
    throw std::invalid_argument("score vector does not match the node count");
  std::vector<EdgeComparisonViolation> out;
  for (auto [u, v] : g.edges()) {
    int net_sign = (pm.at(u, v) > pm.at(v, u)) - (pm.at(u, v) < pm.at(v, u));
    int score_sign = cmp(scores.values[u], scores.values[v]);
    score_sign = (score_sign > 0) - (score_sign < 0);
    if (net_sign != score_sign)
      out.push_back({u, v, net_sign, score_sign});
  }
  return out;
}

std::vector<EdgeComparisonViolation> check_cc(const Graph& g,
                                              const ScoreVector& scores) {
  require_connected(g, "check_cc");
  return check_cc(g, preference_matrix(g, all_pairs_distances(g)), scores);
}

std::vector<BridgeViolation> check_bridge_axiom(const Graph& g,
                                                const ScoreVector& scores) {
  if (static_cast<int>(scores.values.size()) != g.node_count())
    throw std::invalid_argument("score vector does not match the node count");
  std::vector<BridgeViolation> out;
  for (auto [u, v] : g.edges()) {
    if (!is_bridge(g, u, v)) continue;
    BridgeSplit split = bridge_split(g, u, v);
    int64_t su = static_cast<int64_t>(split.side_u.size());
    int64_t sv = static_cast<int64_t>(split.side_v.size());
    if (su == sv) continue;
    int side_sign = su > sv ? 1 : -1;
    int score_sign = cmp(scores.values[u], scores.values[v]);
    score_sign = (score_sign > 0) - (score_sign < 0);
    if (score_sign != side_sign) out.push_back({u, v, su, sv, score_sign});
  }
  return out;
}

std::optional<ConsistencyViolation> check_condorcet_consistency(
    const PreferenceMatrix& pm, const ScoreVector& scores) {
  auto winner = condorcet_winner(pm);
  if (!winner) return std::nullopt;
  std::vector<int> top = top_set(scores);
  if (top.size() == 1 && top.front() == *winner) return std::nullopt;
  return ConsistencyViolation{*winner, std::move(top)};
}

std::optional<ConsistencyViolation> check_condorcet_consistency(
    const Graph& g, const ScoreVector& scores) {
  if (static_cast<int>(scores.values.size()) != g.node_count())
    throw std::invalid_argument("score vector does not match the node count");
  return check_condorcet_consistency(preference_matrix(g), scores);
}

std::vector<EdgeComparisonViolation> check_weak_general_cct(
    const Graph& g, const ScoreVector& scores) {
  require_tree(g, "check_weak_general_cct");
  if (static_cast<int>(scores.values.size()) != g.node_count())
    throw std::invalid_argument("score vector does not match the node count");
  PreferenceMatrix pm = preference_matrix(g);
  std::vector<EdgeComparisonViolation> out;
  const int n = g.node_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || pm.at(u, v) <= pm.at(v, u)) continue;
      if (scores.values[u] <= scores.values[v]) {
        int score_sign = cmp(scores.values[u], scores.values[v]);
        out.push_back({u, v, 1, (score_sign > 0) - (score_sign < 0)});
      }
    }
  return out;
}

}  // namespace ccent
