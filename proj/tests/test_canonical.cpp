#include <doctest.h>

#include "ccent/canonical.hpp"
#include "ccent/centrality.hpp"
#include "ccent/condorcet.hpp"

using namespace ccent;

namespace {

NList nl(std::vector<int64_t> counts) { return make_nlist(std::move(counts)); }

// all lists with total n and every entry >= 1 (compositions of n)
void for_each_realizable(int64_t n, const std::function<void(const NList&)>& fn) {
  std::vector<int64_t> current;
  std::function<void(int64_t)> rec = [&](int64_t left) {
    if (left == 0) {
      fn(NList{current});
      return;
    }
    for (int64_t part = 1; part <= left; ++part) {
      current.push_back(part);
      rec(left - part);
      current.pop_back();
    }
  };
  rec(n);
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("list sums and weights") {
  CHECK(list_sum(nl({2, 2, 4, 4})) == 34);
  CHECK(list_sum(nl({5, 1, 2, 1, 1, 1})) == 28);
  CHECK(list_sum(nl({7})) == 7);

  CHECK(list_weight(nl({5, 1, 2, 1, 1, 1})) == 1);
  CHECK(list_weight(nl({4, 1, 2, 4})) == 4);
  CHECK(list_weight(nl({9})) == 0);
  CHECK_THROWS_AS(list_weight(nl({2, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("list addition") {
  CHECK(list_add(nl({1, 2}), std::vector<int64_t>{1}) == nl({2, 2}));
  CHECK(list_add(nl({3, 1, 2}), std::vector<int64_t>{}) == nl({3, 1, 2}));
  CHECK(list_add(nl({2, 3}), std::vector<int64_t>{1, 1, 1}) == nl({3, 4, 1}));
  // all-ones j-list raises exactly the first j entries
  CHECK(list_add(nl({4, 1, 2, 4}), std::vector<int64_t>{1, 1, 1}) ==
        nl({5, 2, 3, 4}));
}

TEST_CASE("single shift steps") {
  CHECK(shift_step(nl({3, 1, 2, 4, 2}), 3, 4) == nl({3, 2, 1, 3, 3}));
  CHECK(shift_step(nl({4, 1, 2, 4}), 3, 4) == nl({4, 2, 1, 3, 1}));
  CHECK(shift_step(nl({2, 2, 4}), 3, 3) == nl({2, 3, 2, 1}));

  CHECK_THROWS_AS(shift_step(nl({2, 2}), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_step(nl({2, 2}), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(shift_step(nl({2, 1, 1}), 2, 2), std::invalid_argument);
}

TEST_CASE("shift steps preserve total and sum") {
  for (int64_t n = 2; n <= 8; ++n)
    for_each_realizable(n, [&](const NList& a) {
      const int k = static_cast<int>(a.counts.size());
      for (int i = 2; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
          if (a.counts[i - 1] < (i == j ? 2 : 1) || a.counts[j - 1] < 1)
            continue;
          NList b = shift_step(a, i, j);
          CHECK(b.total() == n);
          CHECK(list_sum(b) == list_sum(a));
        }
    });
}

TEST_CASE("canonical lists in closed form") {
  CanonicalList bot = canonical_bot(28, 11);
  CHECK(bot.list == nl({5, 1, 2, 1, 1, 1}));
  CHECK(bot.k == 6);
  CHECK(bot.j == 3);

  CHECK(canonical_bot(7, 7).list == nl({7}));
  CHECK(canonical_bot(7 * 8 / 2, 7).list == nl({1, 1, 1, 1, 1, 1, 1}));

  CHECK_THROWS_AS(canonical_bot(6, 7), std::invalid_argument);
  CHECK_THROWS_AS(canonical_bot(29, 7), std::invalid_argument);
}

TEST_CASE("canonical lists have weight at most one and match reduction") {
  for (int64_t n = 2; n <= 8; ++n)
    for (int64_t sum = n; sum <= n * (n + 1) / 2; ++sum) {
      CanonicalList bot = canonical_bot(sum, n);
      CHECK(bot.list.total() == n);
      CHECK(list_sum(bot.list) == sum);
      CHECK(list_weight(bot.list) <= 1);
    }

  for (int64_t n = 2; n <= 8; ++n)
    for_each_realizable(n, [&](const NList& a) {
      ReductionResult r = reduce_to_canonical(a);
      CHECK(r.canonical.list == canonical_bot(list_sum(a), n).list);
      int64_t prev = list_weight(a);
      for (const NList& step : r.trace) {
        CHECK(step.total() == n);
        CHECK(list_sum(step) == list_sum(a));
        CHECK(list_weight(step) < prev);
        prev = list_weight(step);
      }
      CHECK(static_cast<int64_t>(r.trace.size()) <= std::max<int64_t>(list_weight(a), 0));
    });
}

TEST_CASE("the worked reduction trace") {
  ReductionResult r = reduce_to_canonical(nl({4, 1, 2, 4}));
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[0] == nl({4, 2, 1, 3, 1}));
  CHECK(r.trace[1] == nl({5, 1, 1, 2, 2}));
  CHECK(r.trace[2] == nl({5, 1, 2, 1, 1, 1}));
  CHECK(r.canonical.list == nl({5, 1, 2, 1, 1, 1}));

  ReductionResult already = reduce_to_canonical(nl({5, 1, 2, 1, 1, 1}));
  CHECK(already.trace.empty());

  ReductionResult flat = reduce_to_canonical(nl({2, 2, 2}));
  CHECK(flat.canonical.list == canonical_bot(12, 6).list);

  CHECK_THROWS_AS(reduce_to_canonical(nl({2, 0, 1})), std::invalid_argument);
}

TEST_CASE("caterpillar realizes a profile") {
  std::vector<int64_t> profile{3, 1, 2};
  Graph g = caterpillar_with_profile(profile);
  CHECK(distance_list(g, 0).counts == profile);
  CHECK(is_tree(g));
  CHECK_THROWS_AS(caterpillar_with_profile(std::vector<int64_t>{1, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("shift gadget") {
  MarkedGraph m = build_shift_gadget(2, 4);
  CHECK(m.expected_u0 == std::vector<int64_t>{2, 3, 2, 3});
  CHECK(m.expected_v0 == std::vector<int64_t>{3, 2, 2, 2, 1});
  CHECK(distance_list(m.graph, m.u0).counts == m.expected_u0);
  CHECK(distance_list(m.graph, m.v0).counts == m.expected_v0);
  PreferenceMatrix pm = preference_matrix(m.graph);
  CHECK(compare(pm, m.u0, m.v0) == Preference::Tie);

  MarkedGraph diag = build_shift_gadget(3, 3);
  CHECK(distance_list(diag.graph, diag.u0).counts ==
        std::vector<int64_t>{2, 2, 4});
  CHECK(distance_list(diag.graph, diag.v0).counts ==
        std::vector<int64_t>{2, 3, 2, 1});

  for (int i = 2; i <= 5; ++i)
    for (int j = i; j <= 6; ++j) {
      MarkedGraph g = build_shift_gadget(i, j);
      CHECK(distance_list(g.graph, g.u0).counts == g.expected_u0);
      CHECK(distance_list(g.graph, g.v0).counts == g.expected_v0);
      CHECK(compare(preference_matrix(g.graph), g.u0, g.v0) == Preference::Tie);
    }

  CHECK_THROWS_AS(build_shift_gadget(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_shift_gadget(4, 3), std::invalid_argument);
}

TEST_CASE("extended shift gadget") {
  MarkedGraph m = build_shift_gadget_extended(nl({3, 5, 2, 3, 2}), 2, 4);
  CHECK(m.expected_u0 == std::vector<int64_t>{3, 5, 2, 3, 2});
  CHECK(m.expected_v0 == std::vector<int64_t>{4, 4, 2, 2, 3});
  CHECK(distance_list(m.graph, m.u0).counts == m.expected_u0);
  CHECK(distance_list(m.graph, m.v0).counts == m.expected_v0);
  PreferenceMatrix pm = preference_matrix(m.graph);
  CHECK(compare(pm, m.u0, m.v0) == Preference::Tie);
  ScoreVector cl = closeness(m.graph);
  CHECK(cl.values[m.u0] == cl.values[m.v0]);

  // a custom tail graph is accepted when it realizes the right layers
  Graph tail(3, {{0, 1}, {0, 2}});
  MarkedGraph custom =
      build_shift_gadget_extended(nl({3, 5, 2, 3, 2}), 2, 4, tail, 0);
  CHECK(distance_list(custom.graph, custom.u0).counts == custom.expected_u0);

  Graph bad_tail(2, {{0, 1}});
  CHECK_THROWS_AS(
      build_shift_gadget_extended(nl({3, 5, 2, 3, 2}), 2, 4, bad_tail, 0),
      std::invalid_argument);
  // min-entry condition: some layer below j drops under 2
  CHECK_THROWS_AS(build_shift_gadget_extended(nl({2, 1, 2, 2}), 2, 4),
                  std::invalid_argument);
}

TEST_CASE("minimal-pair gadget") {
  MarkedGraph m = build_minimal_gadget(28, 11);
  CHECK(m.expected_u0 == std::vector<int64_t>{6, 2, 3, 1, 1, 1});
  CHECK(m.expected_v0 == std::vector<int64_t>{6, 2, 2, 2, 1, 1});
  CHECK(distance_list(m.graph, m.u0).counts == m.expected_u0);
  CHECK(distance_list(m.graph, m.v0).counts == m.expected_v0);
  CHECK(compare(preference_matrix(m.graph), m.u0, m.v0) ==
        Preference::FirstPreferred);

  // the two consecutive canonical lists differ on positions j and j+1 only
  CanonicalList bot = canonical_bot(28, 11), next = canonical_bot(29, 11);
  for (size_t pos = 0; pos < bot.list.counts.size(); ++pos) {
    int64_t lhs = bot.list.counts[pos];
    int64_t rhs = pos < next.list.counts.size() ? next.list.counts[pos] : 0;
    if (lhs != rhs)
      CHECK((static_cast<int>(pos) == bot.j - 1 ||
             static_cast<int>(pos) == bot.j));
  }

  CHECK_THROWS_AS(build_minimal_gadget(10, 11), std::invalid_argument);
  CHECK_THROWS_AS(build_minimal_gadget(66, 11), std::invalid_argument);
}

TEST_CASE("regularity probe") {
  auto closeness_f = [](std::span<const int64_t> a) {
    return closeness_of_list(a);
  };
  auto leaf_zero_f = [](std::span<const int64_t> a) {
    return leaf_zeroed_closeness_of_list(a);
  };
  auto ecc_f = [](std::span<const int64_t> a) {
    return eccentricity_of_list(a);
  };

  CHECK(check_regularity(closeness_f, nl({1, 3}), nl({2, 1, 1}),
                         std::vector<int64_t>{1}));
  // zeroing the leaves breaks regularity on this witness triple
  CHECK(!check_regularity(leaf_zero_f, nl({1, 3}), nl({2, 1, 1}),
                          std::vector<int64_t>{1}));

  for (int64_t n = 3; n <= 7; ++n)
    for_each_realizable(n, [&](const NList& a) {
      for_each_realizable(n, [&](const NList& b) {
        std::vector<int64_t> c(std::min(a.counts.size(), b.counts.size()), 1);
        CHECK(check_regularity(closeness_f, a, b, c));
        CHECK(check_regularity(ecc_f, a, b, c));
      });
    });

  CHECK_THROWS_AS(check_regularity(closeness_f, nl({2}), nl({1, 1}),
                                   std::vector<int64_t>{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_regularity(closeness_f, nl({2}), nl({2, 1}),
                                   std::vector<int64_t>{1}),
                  std::invalid_argument);
}

}  // TEST_SUITE
