#include "ccent/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccent {

int64_t NList::total() const {
  return std::accumulate(counts.begin(), counts.end(), int64_t{0});
}

NList make_nlist(std::vector<int64_t> counts) {
  for (int64_t c : counts)
    if (c < 0) throw std::invalid_argument("negative count in list");
  if (!counts.empty() && counts.back() == 0)
    throw std::invalid_argument("trailing zero in list");
  return NList{std::move(counts)};
}

std::string to_string(const NList& a) {
  std::string out = "(";
  for (size_t i = 0; i < a.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.counts[i]);
  }
  return out + ")";
}

int64_t list_sum(const NList& a) {
  int64_t s = 0;
  for (size_t i = 0; i < a.counts.size(); ++i)
    s += static_cast<int64_t>(i + 1) * a.counts[i];
  return s;
}

int64_t list_weight(const NList& a) {
  int64_t w = 0;
  for (size_t i = 1; i < a.counts.size(); ++i) {
    if (a.counts[i] == 0)
      throw std::invalid_argument("weight undefined: zero entry past position 1");
    w += a.counts[i] - 1;
  }
  return w;
}

NList list_add(const NList& a, std::span<const int64_t> b) {
  std::vector<int64_t> out(std::max(a.counts.size(), b.size()), 0);
  std::copy(a.counts.begin(), a.counts.end(), out.begin());
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return make_nlist(std::move(out));
}

NList shift_step(const NList& a, int i, int j) {
  const int k = static_cast<int>(a.counts.size());
  if (i < 2 || i > j || j > k)
    throw std::invalid_argument("shift_step needs 2 <= i <= j <= |a|");
  std::vector<int64_t> b = a.counts;
  b[i - 1] -= 1;
  b[j - 1] -= 1;
  b[i - 2] += 1;
  if (j == k)
    b.push_back(1);
  else
    b[j] += 1;
  if (b[i - 1] < 0 || b[j - 1] < 0)
    throw std::invalid_argument("shift_step would drive an entry negative");
  return make_nlist(std::move(b));
}

CanonicalList canonical_bot(int64_t sum, int64_t n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (sum < n || sum > n * (n + 1) / 2)
    throw std::invalid_argument("sum out of range for an n-list");
  const int64_t excess = sum - n;
  // k: minimal length with 1+2+...+k > excess; j: how far the lone 2 sits
  int64_t k = 1;
  while (k * (k + 1) / 2 <= excess) ++k;
  const int64_t j = excess - (k - 1) * k / 2 + 1;
  std::vector<int64_t> counts(k, 1);
  if (j == 1) {
    counts[0] = n - k + 1;
  } else {
    counts[0] = n - k;
    counts[j - 1] = 2;
  }
  CanonicalList out{make_nlist(std::move(counts)), sum, n, static_cast<int>(k),
                    static_cast<int>(j)};
  return out;
}

ReductionResult reduce_to_canonical(const NList& a) {
  for (int64_t c : a.counts)
    if (c < 1)
      throw std::invalid_argument("reduce_to_canonical needs every entry >= 1");
  ReductionResult out;
  NList current = a;
  const int64_t n = a.total();
  const int64_t sum = list_sum(a);
  while (list_weight(current) > 1) {
    const int k = static_cast<int>(current.counts.size());
    int i = 0, j = 0;
    for (int l = 2; l <= k; ++l)
      if (current.counts[l - 1] >= 2) {
        i = l;
        break;
      }
    for (int l = k; l >= 2; --l)
      if (current.counts[l - 1] >= 2) {
        j = l;
        break;
      }
    const int m = std::min(i - 1, k - j + 1);
    for (int t = 0; t < m; ++t) current = shift_step(current, i - t, j + t);
    out.trace.push_back(current);
  }
  out.canonical = canonical_bot(sum, n);
  if (current != out.canonical.list)
    throw std::logic_error("reduction did not reach the canonical list");
  return out;
}

// ---- gadgets -----------------------------------------------------------------

Graph caterpillar_with_profile(std::span<const int64_t> counts) {
  const int k = static_cast<int>(counts.size());
  for (int64_t c : counts)
    if (c < 1)
      throw std::invalid_argument("profile needs every layer count >= 1");
  std::vector<std::pair<int, int>> edges;
  int next = k + 1;  // spine is 0..k
  for (int t = 1; t <= k; ++t) {
    edges.emplace_back(t - 1, t);
    for (int64_t extra = counts[t - 1] - 1; extra > 0; --extra)
      edges.emplace_back(t - 1, next++);
  }
  return Graph(next, edges);
}

MarkedGraph build_shift_gadget(int i, int j) {
  if (i < 2 || i > j) throw std::invalid_argument("need 2 <= i <= j");
  const int u0 = 0, v0 = j + 1, w = 2 * j + 2;
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < j; ++l) {
    edges.emplace_back(l, l + 1);              // u path
    edges.emplace_back(v0 + l, v0 + l + 1);    // v path
  }
  edges.emplace_back(u0, v0);
  edges.emplace_back(j - 1, v0 + j);
  edges.emplace_back(v0 + i - 2, w);
  MarkedGraph out{Graph(2 * j + 3, edges), u0, v0, {}, {}, "shift skeleton"};
  out.expected_u0.assign(j, 2);
  out.expected_u0[i - 1] += 1;
  out.expected_u0[j - 1] += 1;
  out.expected_v0.assign(j + 1, 2);
  out.expected_v0[i - 2] += 1;
  out.expected_v0[j] = 1;
  return out;
}

MarkedGraph build_shift_gadget_extended(const NList& a, int i, int j,
                                        const Graph& tail, int tail_mark) {
  const int k = static_cast<int>(a.counts.size());
  if (i < 2 || i > j || j > k)
    throw std::invalid_argument("need 2 <= i <= j <= |a|");
  const NList b = shift_step(a, i, j);
  for (int l = 1; l <= j; ++l)
    if (std::min(a.counts[l - 1], b.counts[l - 1]) < 2)
      throw std::invalid_argument(
          "layers up to j need min(a_l, b_l) >= 2; pre-add an all-ones list");

  std::vector<int64_t> tail_profile(a.counts.begin() + j, a.counts.end());
  if (tail_mark < 0 || tail_mark >= tail.node_count())
    throw std::invalid_argument("tail mark out of range");
  if (distance_list(tail, tail_mark).counts != tail_profile ||
      !is_connected(tail))
    throw std::invalid_argument("tail does not realize the layers past j");

  MarkedGraph base = build_shift_gadget(i, j);
  std::vector<std::pair<int, int>> edges = base.graph.edges();
  int next = base.graph.node_count();
  const int v0 = base.v0;
  for (int l = 1; l <= j; ++l) {
    int64_t twins = a.counts[l - 1] - base.expected_u0[l - 1];
    for (int64_t t = 0; t < twins; ++t) {
      edges.emplace_back(l - 1, next);       // u_{l-1}
      edges.emplace_back(v0 + l - 1, next);  // v_{l-1}
      ++next;
    }
  }
  // graft the tail onto v_j
  const int vj = v0 + j;
  std::vector<int> tail_id(tail.node_count());
  for (int x = 0; x < tail.node_count(); ++x)
    tail_id[x] = x == tail_mark ? vj : next++;
  for (auto [x, y] : tail.edges())
    edges.emplace_back(tail_id[x], tail_id[y]);

  MarkedGraph out{Graph(next, edges), base.u0, v0, a.counts, b.counts,
                  "extended shift gadget"};
  return out;
}

MarkedGraph build_shift_gadget_extended(const NList& a, int i, int j) {
  std::vector<int64_t> tail_profile(a.counts.begin() + j, a.counts.end());
  Graph tail = caterpillar_with_profile(tail_profile);
  MarkedGraph out = build_shift_gadget_extended(a, i, j, tail, 0);
  out.note = "extended shift gadget, caterpillar tail";
  return out;
}

MarkedGraph build_minimal_gadget(int64_t sum, int64_t n) {
  if (sum < n || sum >= n * (n + 1) / 2)
    throw std::invalid_argument("need n <= sum < n(n+1)/2");
  const CanonicalList bot = canonical_bot(sum, n);
  const CanonicalList bot_next = canonical_bot(sum + 1, n);
  const int k = bot.k, j = bot.j;
  const int u0 = 0;
  const int v0 = k + 1;                    // v path: k+1 .. k+j
  const int w = k + j + 1;
  const int64_t fan = n - k - 1;           // nodes adjacent to both u0 and v0
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < k; ++l) edges.emplace_back(l, l + 1);
  for (int l = 0; l + 1 < j; ++l) edges.emplace_back(v0 + l, v0 + l + 1);
  edges.emplace_back(u0, v0);
  edges.emplace_back(v0 + j - 1, j);       // rung onto u_j
  edges.emplace_back(w, j - 1);            // pendant off u_{j-1}
  int next = w + 1;
  for (int64_t t = 0; t < fan; ++t, ++next) {
    edges.emplace_back(u0, next);
    edges.emplace_back(v0, next);
  }
  std::vector<int64_t> ones(j, 1);
  MarkedGraph out{Graph(next, edges), u0, v0,
                  list_add(bot.list, ones).counts,
                  list_add(bot_next.list, ones).counts,
                  "minimal-pair gadget"};
  return out;
}

bool check_regularity(const ListFunctional& f, const NList& a, const NList& b,
                      std::span<const int64_t> c) {
  if (c.size() > a.counts.size() || c.size() > b.counts.size())
    throw std::invalid_argument("|c| must not exceed |a| or |b|");
  if (a.total() != b.total())
    throw std::invalid_argument("a and b must be lists of the same total");
  const bool before = f(a.counts) >= f(b.counts);
  const bool after = f(list_add(a, c).counts) >= f(list_add(b, c).counts);
  return before == after;
}

}  // namespace ccent
