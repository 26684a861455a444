#include "ccent/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccent {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.node_count() < 2)
    throw std::invalid_argument(std::string(what) + " needs at least two nodes");
  if (!is_connected(g))
    throw std::invalid_argument(std::string(what) + " is undefined on disconnected graphs");
}

}  // namespace

ScoreVector closeness(const Graph& g) {
  require_connected(g, "closeness");
  const int n = g.node_count();
  ScoreVector out;
  out.measure = "closeness";
  out.values.reserve(n);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    int64_t sum = 0;
    for (int u = 0; u < n; ++u) sum += dist[u].value();
    out.values.emplace_back(1, sum);
  }
  return out;
}

ScoreVector degree(const Graph& g) {
  ScoreVector out;
  out.measure = "degree";
  out.values.reserve(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) out.values.emplace_back(g.degree(v));
  return out;
}

ScoreVector harmonic(const Graph& g) {
  const int n = g.node_count();
  ScoreVector out;
  out.measure = "harmonic";
  out.values.reserve(n);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    Rational sum = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && dist[u].reachable()) sum += Rational(1, dist[u].value());
    out.values.push_back(std::move(sum));
  }
  return out;
}

ScoreVector decay(const Graph& g, const Rational& delta) {
  if (sgn(delta) <= 0 || delta >= 1)
    throw std::invalid_argument("decay delta must lie in (0,1)");
  const int n = g.node_count();
  ScoreVector out;
  out.measure = "decay";
  out.params = {{"delta", to_string(delta)}};
  out.values.reserve(n);
  // powers up to the largest distance seen, grown on demand
  std::vector<Rational> pow{1};
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    Rational sum = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v || !dist[u].reachable()) continue;
      size_t d = static_cast<size_t>(dist[u].value());
      while (pow.size() <= d) pow.push_back(pow.back() * delta);
      sum += pow[d];
    }
    out.values.push_back(std::move(sum));
  }
  return out;
}

ScoreVector eccentricity(const Graph& g) {
  require_connected(g, "eccentricity");
  const int n = g.node_count();
  ScoreVector out;
  out.measure = "eccentricity";
  out.values.reserve(n);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    int k = 0;
    for (int u = 0; u < n; ++u) k = std::max(k, dist[u].value());
    out.values.emplace_back(1, k);
  }
  return out;
}

ScoreVector leaf_zeroed_closeness(const Graph& g) {
  ScoreVector out = closeness(g);
  out.measure = "leaf_zeroed_closeness";
  for (int v = 0; v < g.node_count(); ++v)
    if (g.degree(v) <= 1) out.values[v] = 0;
  return out;
}

Ranking rank(const ScoreVector& scores) {
  const int n = static_cast<int>(scores.values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores.values[a] > scores.values[b];
  });
  Ranking out;
  for (int id : order) {
    if (!out.groups.empty() &&
        scores.values[out.groups.back().front()] == scores.values[id])
      out.groups.back().push_back(id);
    else
      out.groups.push_back({id});
  }
  return out;
}

std::vector<int> top_set(const ScoreVector& scores) {
  if (scores.values.empty()) return {};
  return rank(scores).groups.front();
}

bool same_ranking(const ScoreVector& a, const ScoreVector& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("same_ranking: node sets differ");
  Ranking ra = rank(a), rb = rank(b);
  return ra.groups == rb.groups;
}

// ---- list-level forms --------------------------------------------------------

Rational closeness_of_list(std::span<const int64_t> counts) {
  int64_t sum = 0;
  for (size_t i = 0; i < counts.size(); ++i)
    sum += static_cast<int64_t>(i + 1) * counts[i];
  if (sum == 0) throw std::invalid_argument("closeness of an empty list");
  return Rational(1, sum);
}

Rational degree_of_list(std::span<const int64_t> counts) {
  return counts.empty() ? Rational(0) : Rational(counts[0]);
}

Rational harmonic_of_list(std::span<const int64_t> counts) {
  Rational sum = 0;
  for (size_t i = 0; i < counts.size(); ++i)
    sum += make_rational(counts[i], static_cast<int64_t>(i + 1));
  return sum;
}

Rational decay_of_list(std::span<const int64_t> counts, const Rational& delta) {
  if (sgn(delta) <= 0 || delta >= 1)
    throw std::invalid_argument("decay delta must lie in (0,1)");
  Rational sum = 0, p = 1;
  for (int64_t c : counts) {
    p *= delta;
    sum += c * p;
  }
  return sum;
}

Rational eccentricity_of_list(std::span<const int64_t> counts) {
  if (counts.empty()) throw std::invalid_argument("eccentricity of an empty list");
  return Rational(1, static_cast<int64_t>(counts.size()));
}

Rational leaf_zeroed_closeness_of_list(std::span<const int64_t> counts) {
  if (counts.empty() || counts[0] <= 1) return 0;
  return closeness_of_list(counts);
}

}  // namespace ccent
