#include "ccent/graph.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ccent/prng.hpp"

namespace ccent {

Graph::Graph(int node_count, std::span<const std::pair<int, int>> edge_list)
    : n_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  std::vector<int32_t> deg(n_, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbrs_.resize(2 * edge_list.size());
  std::vector<int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edge_list) {
    nbrs_[cursor[u]++] = v;
    nbrs_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    auto begin = nbrs_.begin() + offsets_[v];
    auto end = nbrs_.begin() + offsets_[v + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      throw std::invalid_argument("duplicate edge");
  }
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<int> new_id(n_, -1);
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> kept;
  for (int u : keep)
    for (int v : neighbors(u))
      if (u < v && new_id[v] >= 0) kept.emplace_back(new_id[u], new_id[v]);
  return Graph(static_cast<int>(keep.size()), kept);
}

// ---- parsing ----------------------------------------------------------------

namespace {

bool is_blank_or_comment(std::string_view line) {
  size_t i = line.find_first_not_of(" \t\r");
  return i == std::string_view::npos || line[i] == '#';
}

// Parses exactly two non-negative integers; nothing else may follow.
bool parse_two_ints(std::string_view line, long& a, long& b) {
  std::istringstream in{std::string(line)};
  if (!(in >> a >> b)) return false;
  std::string rest;
  if (in >> rest) return false;
  return a >= 0 && b >= 0;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  long n = -1, m = -1;
  int line_no = 0;
  size_t pos = 0;
  int header_line = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    long a, b;
    if (!parse_two_ints(line, a, b)) {
      auto kind = n < 0 ? ParseError::Kind::MalformedHeader
                        : ParseError::Kind::MalformedLine;
      throw ParseError(kind, line_no,
                       "line " + std::to_string(line_no) + ": expected two integers");
    }
    if (n < 0) {
      n = a;
      m = b;
      header_line = line_no;
      continue;
    }
    if (static_cast<long>(edges.size()) == m)
      throw ParseError(ParseError::Kind::EdgeCountMismatch, line_no,
                       "line " + std::to_string(line_no) + ": more than the declared " +
                           std::to_string(m) + " edges");
    if (a >= n || b >= n)
      throw ParseError(ParseError::Kind::NodeOutOfRange, line_no,
                       "line " + std::to_string(line_no) + ": node id >= n");
    if (a == b)
      throw ParseError(ParseError::Kind::SelfLoop, line_no,
                       "line " + std::to_string(line_no) + ": self-loop");
    int u = static_cast<int>(std::min(a, b));
    int v = static_cast<int>(std::max(a, b));
    if (std::find(edges.begin(), edges.end(), std::pair(u, v)) != edges.end())
      throw ParseError(ParseError::Kind::DuplicateEdge, line_no,
                       "line " + std::to_string(line_no) + ": duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0)
    throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                     "missing \"n m\" header line");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(ParseError::Kind::EdgeCountMismatch, header_line,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += std::to_string(g.node_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

// ---- BFS / distances ---------------------------------------------------------

namespace {

// Distances from source into `dist` (-1 = unreachable); `queue` is reused
// scratch of size >= n.
void bfs_raw(const Graph& g, int source, int32_t* dist, int32_t* queue) {
  const int n = g.node_count();
  std::fill(dist, dist + n, -1);
  dist[source] = 0;
  int head = 0, tail = 0;
  queue[tail++] = source;
  while (head < tail) {
    int u = queue[head++];
    int32_t du = dist[u];
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = du + 1;
        queue[tail++] = v;
      }
    }
  }
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, int source) {
  const int n = g.node_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("bfs source out of range");
  std::vector<int32_t> dist(n), queue(n);
  bfs_raw(g, source, dist.data(), queue.data());
  std::vector<Distance> out(n);
  for (int v = 0; v < n; ++v)
    out[v] = dist[v] < 0 ? Distance::unreachable() : Distance::of(dist[v]);
  return out;
}

namespace {

void all_pairs_rows(const Graph& g, DistanceMatrix& out, int from, int to,
                    std::vector<int32_t>& scratch) {
  const int n = g.node_count();
  scratch.resize(2 * n);
  int32_t* dist = scratch.data();
  int32_t* queue = scratch.data() + n;
  for (int s = from; s < to; ++s) {
    bfs_raw(g, s, dist, queue);
    auto row = out.row(s);
    for (int v = 0; v < n; ++v)
      row[v] = dist[v] < 0 ? Distance::unreachable() : Distance::of(dist[v]);
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.node_count();
  DistanceMatrix out(n);
#pragma omp parallel
  {
    std::vector<int32_t> scratch;
#pragma omp for schedule(static)
    for (int s = 0; s < n; ++s) all_pairs_rows(g, out, s, s + 1, scratch);
  }
  return out;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  DistanceMatrix out(g.node_count());
  std::vector<int32_t> scratch;
  all_pairs_rows(g, out, 0, g.node_count(), scratch);
  return out;
}

void all_pairs_distances_into(const Graph& g, DistanceMatrix& out,
                              std::vector<int32_t>& scratch) {
  if (out.node_count() != g.node_count()) out = DistanceMatrix(g.node_count());
  all_pairs_rows(g, out, 0, g.node_count(), scratch);
}

bool DistanceMatrix::all_reachable() const {
  return std::all_of(d_.begin(), d_.end(),
                     [](Distance d) { return d.reachable(); });
}

DistanceList distance_list(const Graph& g, int v) {
  const int n = g.node_count();
  if (v < 0 || v >= n) throw std::invalid_argument("node out of range");
  auto dist = bfs_distances(g, v);
  int k = 0;
  int unreachable = 0;
  for (int u = 0; u < n; ++u) {
    if (!dist[u].reachable())
      ++unreachable;
    else
      k = std::max(k, dist[u].value());
  }
  DistanceList out;
  out.counts.assign(k, 0);
  out.unreachable = unreachable;
  for (int u = 0; u < n; ++u)
    if (u != v && dist[u].reachable()) ++out.counts[dist[u].value() - 1];
  return out;
}

// ---- connectivity ------------------------------------------------------------

bool is_connected(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](Distance d) { return d.reachable(); });
}

bool is_tree(const Graph& g) {
  return g.node_count() >= 1 && g.edge_count() == g.node_count() - 1 &&
         is_connected(g);
}

namespace {

// Component of `start` in G - {u,v}, or empty if the other endpoint is still
// reachable (i.e. the edge is not a bridge).
std::vector<int> side_avoiding_edge(const Graph& g, int start, int avoid_a,
                                    int avoid_b) {
  const int n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start}, comp;
  seen[start] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (int w : g.neighbors(u)) {
      if ((u == avoid_a && w == avoid_b) || (u == avoid_b && w == avoid_a))
        continue;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

bool is_bridge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) return false;
  auto side = side_avoiding_edge(g, u, u, v);
  return !std::binary_search(side.begin(), side.end(), v);
}

BridgeSplit bridge_split(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
  auto side_u = side_avoiding_edge(g, u, u, v);
  if (std::binary_search(side_u.begin(), side_u.end(), v))
    throw std::invalid_argument("edge is not a bridge");
  auto side_v = side_avoiding_edge(g, v, u, v);
  return BridgeSplit{std::move(side_u), std::move(side_v)};
}

int64_t subtree_size(const Graph& g, int u, int v) {
  if (!is_tree(g)) throw std::invalid_argument("subtree_size requires a tree");
  if (u == v) throw std::invalid_argument("u and v must differ");
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  const int duv = du[v].value();
  int64_t count = 0;
  for (int w = 0; w < g.node_count(); ++w)
    if (dv[w].value() == du[w].value() + duv) ++count;
  return count;
}

// ---- Prüfer enumeration --------------------------------------------------------

uint64_t labeled_tree_count(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > 16) throw std::invalid_argument("tree count overflows past n=16");
  if (n <= 2) return 1;
  uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<uint64_t>(n);
  return count;
}

namespace {

// Linear-time Prüfer decode.
Graph prufer_decode(int n, std::span<const int> seq) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, edges);
}

}  // namespace

Graph labeled_tree_from_index(int n, uint64_t index) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (index >= labeled_tree_count(n)) throw std::invalid_argument("tree index out of range");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int i = n - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(index % n);
    index /= n;
  }
  return prufer_decode(n, seq);
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& fn,
                     int cap) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > cap) throw std::invalid_argument("n exceeds enumeration cap");
  const uint64_t count = labeled_tree_count(n);
  for (uint64_t i = 0; i < count; ++i) fn(labeled_tree_from_index(n, i));
}

// ---- generators ------------------------------------------------------------------

Graph random_labeled_tree(int n, Xorshift64Star& rng) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(n));
  return prufer_decode(n, seq);
}

Graph random_connected_graph(int n, double edge_prob, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(edge_prob > 0.0) || edge_prob > 1.0)
    throw std::invalid_argument("edge_prob must be in (0, 1]");
  Xorshift64Star rng(seed);
  Graph tree = random_labeled_tree(n, rng);
  std::vector<std::pair<int, int>> edges = tree.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double coin = rng.unit();  // drawn for every pair to keep the stream fixed
      if (tree.has_edge(u, v)) continue;
      if (coin < edge_prob) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

}  // namespace ccent
