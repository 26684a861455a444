#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ccent/graph.hpp"
#include "ccent/rational.hpp"

namespace ccent {

// An abstract list of distance counts (a_1,...,a_k): non-negative entries,
// last entry positive, total n = sum.  Lists are symbolic here; whether an
// actual graph realizes one only matters for the gadget builders.
struct NList {
  std::vector<int64_t> counts;

  int64_t total() const;  // n
  friend bool operator==(const NList&, const NList&) = default;
};

NList make_nlist(std::vector<int64_t> counts);  // validates shape
std::string to_string(const NList& a);

// S(a) = sum of i * a_i.
int64_t list_sum(const NList& a);

// omega(a) = sum over i >= 2 of (a_i - 1); rejects zero entries past the
// first position.
int64_t list_weight(const NList& a);

// Elementwise sum on the common prefix, longer tail copied through.
NList list_add(const NList& a, std::span<const int64_t> b);

// One balance move (1-based indices, 2 <= i <= j <= |a|): take one unit from
// positions i and j, give one to i-1 and j+1 (appending when j = |a|).
// Preserves both the total and S(a).
NList shift_step(const NList& a, int i, int j);

// The unique list of total n and sum S with weight <= 1.  Valid for
// n <= S <= n(n+1)/2.
struct CanonicalList {
  NList list;
  int64_t sum;    // S
  int64_t total;  // n
  int k;          // length
  int j;          // position of the lone 2 (1 when absent)
};

CanonicalList canonical_bot(int64_t sum, int64_t n);

// Repeated shift steps (smallest i, largest j, min{i-1, k-j+1} moves at a
// time) until the weight drops to <= 1.  Input must have every entry >= 1.
// The trace holds each intermediate list, matching the step rule exactly.
struct ReductionResult {
  CanonicalList canonical;
  std::vector<NList> trace;
};

ReductionResult reduce_to_canonical(const NList& a);

// ---- gadget graphs -------------------------------------------------------------

struct MarkedGraph {
  Graph graph;
  int u0;
  int v0;
  std::vector<int64_t> expected_u0;  // required distance counts of u0
  std::vector<int64_t> expected_v0;
  std::string note;
};

// Spine s = node 0 with extra leaves per layer; A(node 0) equals `counts`
// (all entries must be >= 1).
Graph caterpillar_with_profile(std::span<const int64_t> counts);

// Two parallel paths of length j tied at the far end, pendant node off the
// v-path: the marked endpoints tie head-to-head while their distance lists
// differ by one shift at (i, j).  Requires 2 <= i <= j.
MarkedGraph build_shift_gadget(int i, int j);

// Same skeleton padded with twin nodes per layer so the endpoints realize an
// arbitrary list a and its (i,j)-shift; layers past j come from `tail`,
// merged at the end of the v-path (A(tail_mark) must equal the counts of a
// beyond position j).  Requires min(a_l, b_l) >= 2 for every layer l <= j.
MarkedGraph build_shift_gadget_extended(const NList& a, int i, int j,
                                        const Graph& tail, int tail_mark);
// Caterpillar tail built automatically.
MarkedGraph build_shift_gadget_extended(const NList& a, int i, int j);

// Adjacent pair whose distance lists are the canonical lists of sums S and
// S+1 (each plus an all-ones prefix), with the first node strictly
// preferred.  Valid for n <= S < n(n+1)/2.
MarkedGraph build_minimal_gadget(int64_t sum, int64_t n);

// ---- regularity ------------------------------------------------------------------

using ListFunctional = std::function<Rational(std::span<const int64_t>)>;

// Single-instance probe of f(a) >= f(b) <=> f(a+c) >= f(b+c); a sampled
// falsifier, not a proof.
bool check_regularity(const ListFunctional& f, const NList& a, const NList& b,
                      std::span<const int64_t> c);

}  // namespace ccent
