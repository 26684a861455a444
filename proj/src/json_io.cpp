#include "ccent/json_io.hpp"

namespace ccent {

namespace {

Json ranking_to_json(const Ranking& ranking) {
  Json groups = Json::array();
  for (const auto& group : ranking.groups) groups.push_back(group);
  return groups;
}

}  // namespace

Json score_to_json(const ScoreVector& scores, bool include_normalized) {
  Json out;
  out["measure"] = scores.measure;
  out["params"] = Json::object();
  for (const auto& [key, value] : scores.params) out["params"][key] = value;
  Json values = Json::array();
  for (const Rational& r : scores.values) values.push_back(to_string(r));
  out["scores"] = std::move(values);
  if (include_normalized) {
    const int64_t n1 = static_cast<int64_t>(scores.values.size()) - 1;
    Json norm = Json::array();
    for (const Rational& r : scores.values) norm.push_back(to_string(r * n1));
    out["normalized_scores"] = std::move(norm);
  }
  out["ranking"] = ranking_to_json(rank(scores));
  return out;
}

Json hitting_to_json(const HittingMatrix& hitting) {
  Json rows = Json::array();
  for (int u = 0; u < hitting.node_count(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < hitting.node_count(); ++v)
      row.push_back(to_string(hitting.at(u, v)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json condorcet_report_to_json(const CondorcetReport& report) {
  Json out;
  out["winner"] = report.winner ? Json(*report.winner) : Json(nullptr);
  out["weak_winners"] =
      report.weak_winners
          ? Json::array({report.weak_winners->first, report.weak_winners->second})
          : Json(nullptr);
  out["cycle"] = report.cycle ? Json(*report.cycle) : Json(nullptr);
  Json consistency = Json::object();
  for (const auto& [measure, verdict] : report.consistency)
    consistency[measure] = verdict;
  out["consistency"] = std::move(consistency);
  return out;
}

Json fixture_to_json(const Fixture& fixture) {
  Json out;
  out["name"] = fixture.name;
  out["nodes"] = fixture.graph.node_count();
  Json edges = Json::array();
  for (auto [u, v] : fixture.graph.edges()) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  Json marks = Json::object();
  for (const auto& [key, id] : fixture.marks) marks[key] = id;
  out["marks"] = std::move(marks);
  return out;
}

Json marked_graph_to_json(const MarkedGraph& marked) {
  Json out;
  out["nodes"] = marked.graph.node_count();
  out["edge_list"] = format_edge_list(marked.graph, marked.note);
  out["u0"] = marked.u0;
  out["v0"] = marked.v0;
  out["expected_lists"] = {
      {"u0", marked.expected_u0},
      {"v0", marked.expected_v0},
  };
  out["note"] = marked.note;
  return out;
}

Json canonical_to_json(const CanonicalList& canonical) {
  Json out;
  out["list"] = canonical.list.counts;
  out["sum"] = canonical.sum;
  out["n"] = canonical.total;
  out["k"] = canonical.k;
  out["j"] = canonical.j;
  return out;
}

Json reduction_to_json(const ReductionResult& reduction) {
  Json out;
  Json trace = Json::array();
  for (const NList& step : reduction.trace) trace.push_back(step.counts);
  out["trace"] = std::move(trace);
  out["canonical"] = canonical_to_json(reduction.canonical);
  return out;
}

namespace {

Json witness_to_json(const Witness& w) {
  Json out;
  out["instance"] = w.instance;
  out["detail"] = w.detail;
  out["edge_list"] = w.edge_list;
  return out;
}

}  // namespace

Json verification_report_to_json(const VerificationReport& report) {
  Json out;
  out["suite"] = report.suite;
  Json params = Json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  out["params"] = std::move(params);
  Json claims = Json::array();
  for (const ClaimResult& c : report.claims) {
    Json claim;
    claim["claim"] = c.claim;
    claim["instances"] = c.instances;
    claim["violations"] = c.violations;
    claim["pass"] = c.passed();
    claim["witness"] = c.witness ? witness_to_json(*c.witness) : Json(nullptr);
    claims.push_back(std::move(claim));
  }
  out["claims"] = std::move(claims);
  out["pass"] = report.all_passed();
  return out;
}

Json search_result_to_json(const SearchOptions& options,
                           const SearchResult& result) {
  Json out;
  out["measure"] = std::string(measure_name(options.measure));
  if (options.measure == Measure::Decay)
    out["delta"] = to_string(options.delta);
  out["axiom"] = options.axiom;
  out["domain"] = options.domain;
  out["n_max"] = options.n_max;
  out["budget"] = options.budget;
  out["seed"] = options.seed;
  out["examined"] = result.examined;
  out["witness"] = result.witness ? witness_to_json(*result.witness) : Json(nullptr);
  return out;
}

}  // namespace ccent
