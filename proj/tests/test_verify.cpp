#include <doctest.h>

#include "ccent/json_io.hpp"
#include "ccent/verify.hpp"

using namespace ccent;

TEST_SUITE("verify") {

TEST_CASE("tree suite passes on small sizes") {
  VerificationReport report = run_tree_suite(6, 5, 5);
  CHECK(report.all_passed());
  // 1 + 3 + 16 + 125 + 1296 trees on 2..6 nodes
  bool found = false;
  for (const auto& [key, value] : report.params)
    if (key == "trees") {
      CHECK(value == "1441");
      found = true;
    }
  CHECK(found);
  for (const ClaimResult& claim : report.claims) {
    CHECK(claim.violations == 0);
    CHECK(claim.instances > 0);
  }
}

TEST_CASE("graph suite passes on a small run") {
  VerificationReport report = run_graph_suite(150, 14, 7);
  CHECK(report.all_passed());
}

TEST_CASE("reports are deterministic") {
  Json a = verification_report_to_json(run_graph_suite(60, 12, 5));
  Json b = verification_report_to_json(run_graph_suite(60, 12, 5));
  CHECK(a.dump() == b.dump());

  Json t1 = verification_report_to_json(run_tree_suite(5, 4, 4));
  Json t2 = verification_report_to_json(run_tree_suite(5, 4, 4));
  CHECK(t1.dump() == t2.dump());
}

TEST_CASE("search finds the classic consistency violations on trees") {
  for (Measure m : {Measure::Degree, Measure::Harmonic, Measure::Decay}) {
    SearchOptions o;
    o.measure = m;
    o.axiom = "condorcet-consistency";
    o.domain = "trees";
    o.n_max = 11;
    o.budget = 4000;
    o.seed = 3;
    SearchResult r = search_counterexample(o);
    REQUIRE(r.witness.has_value());
    // the witness must re-verify from its serialized form
    Graph g = parse_edge_list(r.witness->edge_list);
    ScoreVector scores = compute_measure(g, m, o.delta);
    CHECK(check_condorcet_consistency(g, scores).has_value());
    CHECK(is_tree(g));
    CHECK(g.node_count() <= 11);
  }
}

TEST_CASE("search finds nothing for closeness") {
  SearchOptions o;
  o.measure = Measure::Closeness;
  o.axiom = "condorcet-consistency";
  o.domain = "trees";
  o.n_max = 10;
  o.budget = 1500;
  SearchResult r = search_counterexample(o);
  CHECK(!r.witness.has_value());
  CHECK(r.examined == 1500);

  o.axiom = "cc";
  o.domain = "graphs";
  o.budget = 800;
  CHECK(!search_counterexample(o).witness.has_value());
}

TEST_CASE("search output is deterministic") {
  SearchOptions o;
  o.measure = Measure::Harmonic;
  o.axiom = "condorcet-consistency";
  o.budget = 2000;
  o.seed = 11;
  SearchResult a = search_counterexample(o);
  SearchResult b = search_counterexample(o);
  CHECK(search_result_to_json(o, a).dump() == search_result_to_json(o, b).dump());
}

TEST_CASE("json shapes") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Json score = score_to_json(closeness(p3), true);
  CHECK(score["measure"] == "closeness");
  CHECK(score["scores"] == Json::array({"1/3", "1/2", "1/3"}));
  CHECK(score["normalized_scores"][1] == "1");
  CHECK(score["ranking"] == Json::array({Json::array({1}), Json::array({0, 2})}));

  Json hit = hitting_to_json(hitting_times(p3));
  CHECK(hit[0][2] == "4");
  CHECK(hit[1][1] == "0");

  Json report = condorcet_report_to_json(build_condorcet_report(p3));
  CHECK(report["winner"] == 1);
  CHECK(report["weak_winners"].is_null());
  CHECK(report["cycle"].is_null());
  CHECK(report["consistency"]["closeness"] == "consistent");
  CHECK(report["consistency"]["w"] == "consistent");
}

TEST_CASE("search rejects nonsense options") {
  SearchOptions o;
  o.axiom = "totally-new-axiom";
  CHECK_THROWS_AS(search_counterexample(o), std::invalid_argument);
  o.axiom = "cc";
  o.domain = "multigraphs";
  CHECK_THROWS_AS(search_counterexample(o), std::invalid_argument);
  o.domain = "graphs";
  o.axiom = "weak-general-cct";
  CHECK_THROWS_AS(search_counterexample(o), std::invalid_argument);
}

}  // TEST_SUITE
