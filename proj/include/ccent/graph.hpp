#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccent {

// Shortest-path distance with an explicit unreachable state. Callers must
// test reachable() before value(); there is no magic large number to leak
// into arithmetic.
class Distance {
 public:
  constexpr Distance() = default;
  static constexpr Distance unreachable() { return Distance(); }
  static constexpr Distance of(int steps) { return Distance(steps); }

  constexpr bool reachable() const { return steps_ >= 0; }
  constexpr int value() const {
    if (steps_ < 0) throw std::logic_error("unreachable distance has no value");
    return steps_;
  }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  constexpr explicit Distance(int32_t steps) : steps_(steps) {}
  int32_t steps_ = -1;
};

// Undirected, unweighted, simple graph over node ids 0..n-1.  Immutable after
// construction; adjacency is CSR with sorted neighbor lists.  The constructor
// rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::span<const std::pair<int, int>> edge_list);
  Graph(int node_count, std::initializer_list<std::pair<int, int>> edge_list)
      : Graph(node_count, std::span<const std::pair<int, int>>(
                              edge_list.begin(), edge_list.size())) {}

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(nbrs_.size() / 2); }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int32_t> neighbors(int v) const {
    return {nbrs_.data() + offsets_[v],
            nbrs_.data() + offsets_[v + 1]};
  }
  bool has_edge(int u, int v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on `keep` (ids relabeled to 0..|keep|-1 in given order).
  Graph induced(std::span<const int> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<int32_t> offsets_{0};
  std::vector<int32_t> nbrs_;
};

// ---- edge-list text format ------------------------------------------------
//
// First line "n m", then m lines "u v" with 0 <= u,v < n.  Lines whose first
// non-blank character is '#' are comments; blank lines are skipped.

struct ParseError : std::runtime_error {
  enum class Kind {
    MalformedHeader,
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    NodeOutOfRange,
    EdgeCountMismatch,
  };
  ParseError(Kind k, int line_number, const std::string& message)
      : std::runtime_error(message), kind(k), line(line_number) {}
  Kind kind;
  int line;  // 1-based; 0 when not tied to a single line
};

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g, std::string_view comment = {});

// ---- distances ------------------------------------------------------------

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n) {}

  int node_count() const { return n_; }
  Distance at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  Distance& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }
  std::span<const Distance> row(int u) const {
    return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }
  std::span<Distance> row(int u) {
    return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }
  bool all_reachable() const;

 private:
  int n_ = 0;
  std::vector<Distance> d_;
};

std::vector<Distance> bfs_distances(const Graph& g, int source);

// OpenMP over sources; the _serial variant is the reference used in tests
// and benchmarks.
DistanceMatrix all_pairs_distances(const Graph& g);
DistanceMatrix all_pairs_distances_serial(const Graph& g);
// Reuses the storage of `out` (and `scratch`, sized >= n); serial.
void all_pairs_distances_into(const Graph& g, DistanceMatrix& out,
                              std::vector<int32_t>& scratch);

// Counts of nodes at distance 1..k from v; nodes in other components are
// excluded from the counts and tallied in `unreachable`.
struct DistanceList {
  std::vector<int64_t> counts;
  int unreachable = 0;
};

DistanceList distance_list(const Graph& g, int v);

// ---- connectivity, trees, bridges ------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// The two components of G - {u,v}; throws if the edge is absent or not a
// bridge.  u lands in side_u, v in side_v.
struct BridgeSplit {
  std::vector<int> side_u;
  std::vector<int> side_v;
};

BridgeSplit bridge_split(const Graph& g, int u, int v);
bool is_bridge(const Graph& g, int u, int v);

// |{w : d(w,v) = d(w,u) + d(u,v)}| — the size of the subtree hanging off u
// when the tree is rooted at v.  Counted by the defining equation, not by
// rooted traversal, so it stays an independent route for cross-checks.
int64_t subtree_size(const Graph& g, int u, int v);

// ---- labeled-tree enumeration (Prüfer) --------------------------------------

inline constexpr int kTreeEnumCap = 9;

// n^(n-2) for n >= 2, 1 for n in {0,1}; requires n <= 16 to fit in 64 bits.
uint64_t labeled_tree_count(int n);

// Decodes the index'th Prüfer sequence (base-n digits) into a tree.
Graph labeled_tree_from_index(int n, uint64_t index);

void enumerate_trees(int n, const std::function<void(const Graph&)>& fn,
                     int cap = kTreeEnumCap);

// ---- generators -------------------------------------------------------------

class Xorshift64Star;

// Connected by construction: a uniform random labeled spanning tree first,
// then every remaining pair independently with probability edge_prob.
// Identical (n, edge_prob, seed) gives an identical graph.
Graph random_connected_graph(int n, double edge_prob, uint64_t seed);

Graph random_labeled_tree(int n, Xorshift64Star& rng);

}  // namespace ccent
