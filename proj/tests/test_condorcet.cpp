#include <doctest.h>

#include "ccent/condorcet.hpp"
#include "ccent/fixtures.hpp"
#include "ccent/measures.hpp"
#include "ccent/random_walk.hpp"

using namespace ccent;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

}  // namespace

TEST_SUITE("condorcet") {

TEST_CASE("net counts") {
  Fixture f2 = fixture("fig2");
  PreferenceMatrix pm = preference_matrix(f2.graph);
  CHECK(pm.at(f2.mark("u"), f2.mark("v")) == 5);
  CHECK(pm.at(f2.mark("v"), f2.mark("u")) == 4);

  PreferenceMatrix p2 = preference_matrix(path(2));
  CHECK(p2.at(0, 1) == 1);
  CHECK(p2.at(1, 0) == 1);
  CHECK(p2.at(0, 0) == 0);

  Fixture f4 = fixture("fig4");
  PreferenceMatrix pm4 = preference_matrix(f4.graph);
  CHECK(pm4.at(f4.mark("u"), f4.mark("v")) >
        pm4.at(f4.mark("v"), f4.mark("u")));

  // equidistant voters count for neither side
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_connected_graph(9, 0.4, seed);
    PreferenceMatrix pm9 = preference_matrix(g);
    for (int u = 0; u < 9; ++u) {
      CHECK(pm9.at(u, u) == 0);
      for (int v = 0; v < 9; ++v)
        CHECK(pm9.at(u, v) + pm9.at(v, u) <= 9);
    }
  }

  CHECK_THROWS_AS(preference_matrix(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("pairwise comparison") {
  Fixture f2 = fixture("fig2");
  PreferenceMatrix pm = preference_matrix(f2.graph);
  CHECK(compare(pm, f2.mark("u"), f2.mark("v")) == Preference::FirstPreferred);

  PreferenceMatrix p2 = preference_matrix(path(2));
  CHECK(compare(p2, 0, 1) == Preference::Tie);
  CHECK_THROWS_AS(compare(p2, 1, 1), std::invalid_argument);

  Fixture f1 = fixture("fig1");
  PreferenceMatrix pm1 = preference_matrix(f1.graph);
  for (int s = 0; s < f1.graph.node_count(); ++s)
    if (s != f1.mark("v"))
      CHECK(compare(pm1, f1.mark("v"), s) == Preference::FirstPreferred);
}

TEST_CASE("condorcet winners") {
  Fixture f1 = fixture("fig1");
  CHECK(condorcet_winner(preference_matrix(f1.graph)) == f1.mark("v"));

  Fixture f2 = fixture("fig2");
  CHECK(!condorcet_winner(preference_matrix(f2.graph)).has_value());

  Fixture g = fixture("fig6g"), gp = fixture("fig6gp");
  CHECK(condorcet_winner(preference_matrix(g.graph)) == g.mark("u"));
  CHECK(condorcet_winner(preference_matrix(gp.graph)) == gp.mark("v"));
}

TEST_CASE("weak condorcet winners") {
  Graph p4 = path(4);
  auto pair = weak_condorcet_winners(p4, preference_matrix(p4));
  CHECK(pair == std::pair{1, 2});

  Graph p3 = path(3);
  CHECK(!weak_condorcet_winners(p3, preference_matrix(p3)).has_value());

  for (int n = 4; n <= 8; n += 2) {
    Graph p = path(n);
    auto mid = weak_condorcet_winners(p, preference_matrix(p));
    CHECK(mid == std::pair{n / 2 - 1, n / 2});
  }

  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(weak_condorcet_winners(triangle, preference_matrix(triangle)),
                  std::invalid_argument);
}

TEST_CASE("cycle detection") {
  Fixture f2 = fixture("fig2");
  PreferenceMatrix pm = preference_matrix(f2.graph);
  auto cycle = find_condorcet_cycle(pm);
  REQUIRE(cycle.has_value());
  REQUIRE(cycle->size() >= 2);
  for (size_t i = 0; i < cycle->size(); ++i) {
    int a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
    CHECK(compare(pm, a, b) == Preference::FirstPreferred);
  }

  Fixture f1 = fixture("fig1");
  CHECK(!find_condorcet_cycle(preference_matrix(f1.graph)).has_value());

  for (int n = 2; n <= 7; ++n)
    enumerate_trees(n, [](const Graph& g) {
      CHECK(!find_condorcet_cycle(preference_matrix(g)).has_value());
    });
}

TEST_CASE("levels") {
  Fixture f5 = fixture("fig5");
  PreferenceMatrix pm = preference_matrix(f5.graph);
  CHECK(level(f5.graph, pm, f5.mark("r")) == 0);
  CHECK(level(f5.graph, pm, f5.mark("u")) == 2);
  CHECK(level(f5.graph, pm, f5.mark("t")) == 1);

  // two weak winners: level is the distance to the closer one
  Graph p4 = path(4);
  PreferenceMatrix pm4 = preference_matrix(p4);
  CHECK(level(p4, pm4, 0) == 1);
  CHECK(level(p4, pm4, 1) == 0);
  CHECK(level(p4, pm4, 2) == 0);
}

TEST_CASE("structural comparison equals counting votes") {
  Fixture f5 = fixture("fig5");
  TreeContext ctx(f5.graph);
  CHECK(tree_compare_structural(ctx, f5.mark("u"), f5.mark("v")) ==
        Preference::Tie);
  CHECK(tree_compare_structural(ctx, f5.mark("v"), f5.mark("w")) ==
        Preference::Tie);
  CHECK(tree_compare_structural(ctx, f5.mark("w"), f5.mark("u")) ==
        Preference::FirstPreferred);

  for (int n = 2; n <= 6; ++n)
    enumerate_trees(n, [](const Graph& g) {
      PreferenceMatrix pm = preference_matrix(g);
      TreeContext ctx(g);
      for (int u = 0; u < g.node_count(); ++u)
        for (int v = 0; v < g.node_count(); ++v)
          if (u != v)
            CHECK(tree_compare_structural(ctx, u, v) == compare(pm, u, v));
    });

  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(tree_compare_structural(triangle, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("majority lists") {
  Fixture f5 = fixture("fig5");
  CHECK(lt_list(f5.graph, f5.mark("r")).values.empty());
  CHECK(lt_list(f5.graph, f5.mark("w")).values == std::vector<int64_t>{6, 8});

  // list length equals the level, here checked on every node of small trees
  for (int n = 2; n <= 6; ++n)
    enumerate_trees(n, [](const Graph& g) {
      PreferenceMatrix pm = preference_matrix(g);
      TreeContext ctx(g);
      for (int v = 0; v < g.node_count(); ++v)
        CHECK(static_cast<int>(lt_list(ctx, v).values.size()) ==
              level(g, pm, v));
    });
}

TEST_CASE("shortlex order") {
  LtList empty, six{{6}}, six8{{6, 8}}, six9{{6, 9}};
  CHECK(shortlex_compare(empty, six) < 0);
  CHECK(shortlex_compare(six8, six9) < 0);
  CHECK(shortlex_compare(six9, six9) == 0);
  CHECK(shortlex_compare(six9, six8) > 0);
}

TEST_CASE("w measure values on fig5") {
  Fixture f = fixture("fig5");
  ScoreVector w = w_measure(f.graph);
  CHECK(w.values[f.mark("r")] == 1);
  CHECK(w.values[f.mark("branch_left")] == Rational(1, 60));
  CHECK(w.values[f.mark("t")] == Rational(1, 90));
  CHECK(w.values[f.mark("w")] == Rational(1, 680));
  CHECK(w.values[f.mark("u")] == Rational(1, 690));
  CHECK(w.values[f.mark("v")] == Rational(1, 690));
  CHECK(w.values[f.mark("deep_leaf")] == Rational(1, 6890));
}

TEST_CASE("w measure on P3") {
  ScoreVector w = w_measure(path(3));
  CHECK(w.values[1] == 1);
  CHECK(w.values[0] == Rational(1, 6));
  CHECK(w.values[2] == Rational(1, 6));
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(w_measure(triangle), std::invalid_argument);
}

TEST_CASE("edge-comparison checker") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_connected_graph(9, 0.35, seed);
    CHECK(check_cc(g, closeness(g)).empty());
  }

  Fixture f1 = fixture("fig1");
  CHECK(!check_cc(f1.graph, rw_closeness(f1.graph)).empty());

  Fixture f3 = fixture("fig3");
  auto violations = check_cc(f3.graph, degree(f3.graph));
  bool hits_uv = false;
  for (const auto& violation : violations)
    if ((violation.u == f3.mark("u") && violation.v == f3.mark("v")) ||
        (violation.u == f3.mark("v") && violation.v == f3.mark("u")))
      hits_uv = true;
  CHECK(hits_uv);

  ScoreVector wrong_size{.measure = "t", .values = {1}};
  CHECK_THROWS_AS(check_cc(f3.graph, wrong_size), std::invalid_argument);
}

TEST_CASE("bridge axiom checker") {
  for (int n = 2; n <= 7; ++n)
    enumerate_trees(n, [](const Graph& g) {
      CHECK(check_bridge_axiom(g, closeness(g)).empty());
      CHECK(check_bridge_axiom(g, w_measure(g)).empty());
    });

  // small dense side, large sparse side: sizes say one thing, the random
  // walk says the other
  Graph lopsided(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},  // K4
                     {3, 4},                                          // bridge
                     {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK(!check_bridge_axiom(lopsided, rw_closeness(lopsided)).empty());
  CHECK(check_bridge_axiom(lopsided, closeness(lopsided)).empty());
}

TEST_CASE("consistency checker") {
  Fixture g = fixture("fig6g");
  auto violation = check_condorcet_consistency(g.graph, closeness(g.graph));
  REQUIRE(violation.has_value());
  CHECK(violation->winner == g.mark("u"));
  CHECK(violation->top == std::vector{g.mark("v")});

  Fixture f3 = fixture("fig3");
  auto h = check_condorcet_consistency(f3.graph, harmonic(f3.graph));
  REQUIRE(h.has_value());
  CHECK(h->winner == f3.mark("v"));
  CHECK(h->top == std::vector{f3.mark("u")});

  for (int n = 2; n <= 7; ++n)
    enumerate_trees(n, [](const Graph& g) {
      CHECK(!check_condorcet_consistency(g, closeness(g)).has_value());
    });
}

TEST_CASE("the harness notices a broken measure") {
  // negated closeness flips the ranking; consistency must fail somewhere
  int failures = 0;
  enumerate_trees(5, [&](const Graph& g) {
    ScoreVector mutant = closeness(g);
    mutant.measure = "negated";
    for (Rational& value : mutant.values) value = -value;
    if (check_condorcet_consistency(g, mutant)) ++failures;
  });
  CHECK(failures > 0);
}

TEST_CASE("weak general comparison checker") {
  Fixture f4 = fixture("fig4");
  auto violations = check_weak_general_cct(f4.graph, closeness(f4.graph));
  bool has_uv = false;
  for (const auto& violation : violations)
    if (violation.u == f4.mark("u") && violation.v == f4.mark("v"))
      has_uv = true;
  CHECK(has_uv);

  CHECK(check_weak_general_cct(path(2), closeness(path(2))).empty());

  for (int n = 2; n <= 6; ++n)
    enumerate_trees(n, [](const Graph& g) {
      CHECK(check_weak_general_cct(g, w_measure(g)).empty());
    });

  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(check_weak_general_cct(triangle, ScoreVector{}),
                  std::invalid_argument);
}

TEST_CASE("election report") {
  Fixture f1 = fixture("fig1");
  CondorcetReport report = build_condorcet_report(f1.graph);
  CHECK(report.winner == f1.mark("v"));
  CHECK(!report.cycle.has_value());
  bool closeness_consistent = false, rwc_violation = false;
  for (const auto& [measure, verdict] : report.consistency) {
    if (measure == "closeness") closeness_consistent = verdict == "consistent";
    if (measure == "rwc") rwc_violation = verdict == "violation";
  }
  CHECK(closeness_consistent);
  CHECK(rwc_violation);

  Fixture f2 = fixture("fig2");
  CondorcetReport r2 = build_condorcet_report(f2.graph);
  CHECK(!r2.winner.has_value());
  CHECK(r2.cycle.has_value());
}

}  // TEST_SUITE
