#include "ccent/verify.hpp"

#include <algorithm>
#include <iterator>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccent/fixtures.hpp"
#include "ccent/prng.hpp"

namespace ccent {

namespace {

#ifdef _OPENMP
int worker_count() { return omp_get_max_threads(); }
int worker_id() { return omp_get_thread_num(); }
#else
int worker_count() { return 1; }
int worker_id() { return 0; }
#endif

// Instance-indexed seed stream (splitmix-style), so instance i yields the
// same graph no matter which worker draws it.
uint64_t instance_seed(uint64_t seed, uint64_t i) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Accumulator {
  uint64_t instances = 0;
  uint64_t violations = 0;
  std::optional<Witness> witness;

  void pass() { ++instances; }
  void fail(uint64_t instance, const Graph& g, std::string detail) {
    ++instances;
    ++violations;
    if (!witness || instance < witness->instance)
      witness = Witness{format_edge_list(g), std::move(detail), instance};
  }
  void check(bool ok, uint64_t instance, const Graph& g, auto detail_fn) {
    if (ok)
      pass();
    else
      fail(instance, g, detail_fn());
  }
  void merge(const Accumulator& other) {
    instances += other.instances;
    violations += other.violations;
    if (other.witness && (!witness || other.witness->instance < witness->instance))
      witness = other.witness;
  }
};

int pref_sign(const PreferenceMatrix& pm, int u, int v) {
  return (pm.at(u, v) > pm.at(v, u)) - (pm.at(u, v) < pm.at(v, u));
}

int rational_sign(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

std::string preference_name(Preference p) {
  switch (p) {
    case Preference::FirstPreferred: return "first";
    case Preference::Tie: return "tie";
    case Preference::SecondPreferred: return "second";
  }
  return "?";
}

// ---- tree suite -----------------------------------------------------------

struct TreeClaims {
  Accumulator closeness_consistent;
  Accumulator preference_transitive;
  Accumulator closeness_edge_gap;
  Accumulator closeness_subtree_identity;
  Accumulator split_matches_subtree;
  Accumulator winners_structural;
  Accumulator path_compare_stable;
  Accumulator structural_agrees;
  Accumulator cc_implies_consistent;
  Accumulator rwc_consistent;
  Accumulator hitting_edge_identity;
  Accumulator rwc_edge_gap;
  Accumulator rwc_subtree_identity;
  Accumulator same_ranking_both;
  Accumulator w_weak_cct;
  Accumulator w_shortlex;

  void merge(const TreeClaims& o) {
    closeness_consistent.merge(o.closeness_consistent);
    preference_transitive.merge(o.preference_transitive);
    closeness_edge_gap.merge(o.closeness_edge_gap);
    closeness_subtree_identity.merge(o.closeness_subtree_identity);
    split_matches_subtree.merge(o.split_matches_subtree);
    winners_structural.merge(o.winners_structural);
    path_compare_stable.merge(o.path_compare_stable);
    structural_agrees.merge(o.structural_agrees);
    cc_implies_consistent.merge(o.cc_implies_consistent);
    rwc_consistent.merge(o.rwc_consistent);
    hitting_edge_identity.merge(o.hitting_edge_identity);
    rwc_edge_gap.merge(o.rwc_edge_gap);
    rwc_subtree_identity.merge(o.rwc_subtree_identity);
    same_ranking_both.merge(o.same_ranking_both);
    w_weak_cct.merge(o.w_weak_cct);
    w_shortlex.merge(o.w_shortlex);
  }
};

std::string ids_to_string(const std::vector<int>& ids) {
  std::string out = "[";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

void check_one_tree(const Graph& g, uint64_t instance, int rwc_n_max,
                    int measures_n_max, TreeClaims& acc) {
  const int n = g.node_count();
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  const PreferenceMatrix pm = preference_matrix(g, dist);
  const TreeContext ctx(g);
  const ScoreVector cl = closeness(g);
  const auto winner = condorcet_winner(pm);

  // winner / weak-pair agreement between the vote count and the edge-split
  // route, plus existence of exactly one of the two
  {
    bool ok = winner == ctx.winner();
    std::string detail;
    try {
      auto weak = weak_condorcet_winners(g, pm);
      ok = ok && weak == ctx.weak_pair() && weak.has_value() != winner.has_value();
    } catch (const std::logic_error& e) {
      ok = false;
      detail = e.what();
    }
    acc.winners_structural.check(ok, instance, g, [&] {
      return detail.empty() ? "winner/weak pair mismatch between routes" : detail;
    });
  }

  // Condorcet winner must top the closeness ranking
  if (winner) {
    std::vector<int> top = top_set(cl);
    acc.closeness_consistent.check(
        top.size() == 1 && top.front() == *winner, instance, g, [&] {
          return "winner " + std::to_string(*winner) + " but closeness top " +
                 ids_to_string(top);
        });
  }

  // strict preference is transitive and acyclic
  {
    bool ok = !find_condorcet_cycle(pm).has_value();
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        for (int w = 0; w < n && ok; ++w) {
          if (u == v || v == w || u == w) continue;
          if (pref_sign(pm, u, v) > 0 && pref_sign(pm, v, w) > 0 &&
              pref_sign(pm, u, w) <= 0)
            ok = false;
        }
    acc.preference_transitive.check(ok, instance, g,
                               [] { return "strict preference not transitive"; });
  }

  // inverse-closeness gap across each edge equals the side-size gap, which
  // on a tree is also the net vote gap
  for (auto [u, v] : g.edges()) {
    const Rational gap = 1 / cl.values[v] - 1 / cl.values[u];
    const int64_t sides = ctx.subtree(u, v) - ctx.subtree(v, u);
    const int64_t votes = pm.at(u, v) - pm.at(v, u);
    acc.closeness_edge_gap.check(gap == sides && sides == votes, instance, g,
                             [&, u = u, v = v] {
      return "edge (" + std::to_string(u) + "," + std::to_string(v) +
             "): closeness gap " + to_string(gap) + " vs side gap " +
             std::to_string(sides) + " vs vote gap " + std::to_string(votes);
    });
  }

  // inverse closeness = sum of subtree sizes
  for (int v = 0; v < n; ++v) {
    int64_t sum = 0;
    for (int u = 0; u < n; ++u)
      if (u != v) sum += ctx.subtree(u, v);
    acc.closeness_subtree_identity.check(1 / cl.values[v] == sum, instance, g, [&] {
      return "node " + std::to_string(v) + ": subtree sum " + std::to_string(sum) +
             " vs inverse closeness " + to_string(1 / cl.values[v]);
    });
  }

  // bridge_split, the defining-equation count, and the rooted table must all
  // give the same side sizes
  for (auto [u, v] : g.edges()) {
    BridgeSplit split = bridge_split(g, u, v);
    const int64_t su = static_cast<int64_t>(split.side_u.size());
    const int64_t sv = static_cast<int64_t>(split.side_v.size());
    int64_t su_def = 0;  // |{w : d(w,v) = d(w,u) + 1}|
    for (int w = 0; w < n; ++w)
      if (dist.at(w, v).value() == dist.at(w, u).value() + 1) ++su_def;
    bool ok = su == ctx.subtree(u, v) && sv == ctx.subtree(v, u) &&
              su == su_def && sv == n - su_def;
    acc.split_matches_subtree.check(ok, instance, g, [&, u = u, v = v] {
      return "edge (" + std::to_string(u) + "," + std::to_string(v) +
             "): split sides disagree with subtree counts";
    });
  }

  // verdicts are stable when both endpoints step toward each other
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || ctx.dist(u, v) < 3) continue;
      int u2 = ctx.step_toward(u, v);
      int v2 = ctx.step_toward(v, u);
      acc.path_compare_stable.check(
          pref_sign(pm, u, v) == pref_sign(pm, u2, v2), instance, g, [&] {
            return "pair (" + std::to_string(u) + "," + std::to_string(v) +
                   ") differs from (" + std::to_string(u2) + "," +
                   std::to_string(v2) + ")";
          });
    }

  // level/middle-node verdict agrees with counting votes
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      Preference structural = tree_compare_structural(ctx, u, v);
      Preference counted = compare(pm, u, v);
      acc.structural_agrees.check(
          structural == counted, instance, g, [&] {
            return "pair (" + std::to_string(u) + "," + std::to_string(v) +
                   "): structural " + preference_name(structural) + " vs " +
                   preference_name(counted);
          });
    }

  // any measure that passes the edge-comparison axiom must rank the winner
  // first
  if (n <= measures_n_max) {
    for (Measure m :
         {Measure::Closeness, Measure::Degree, Measure::Harmonic, Measure::Decay,
          Measure::Eccentricity, Measure::RwCloseness, Measure::WMeasure,
          Measure::LeafZeroedCloseness}) {
      ScoreVector scores = compute_measure(g, m, default_decay_delta());
      if (!check_cc(g, pm, scores).empty()) continue;
      if (!winner) {
        acc.cc_implies_consistent.pass();
        continue;
      }
      std::vector<int> top = top_set(scores);
      acc.cc_implies_consistent.check(
          top.size() == 1 && top.front() == *winner, instance, g, [&] {
            return std::string(measure_name(m)) +
                   " passes edge comparison but top is " + ids_to_string(top);
          });
    }
  }

  if (n <= rwc_n_max && n >= 2) {
    const HittingMatrix hm = hitting_times_serial(g);
    const ScoreVector rwcl = rw_closeness(g, hm);

    if (winner) {
      std::vector<int> top = top_set(rwcl);
      acc.rwc_consistent.check(
          top.size() == 1 && top.front() == *winner, instance, g, [&] {
            return "winner " + std::to_string(*winner) + " but rwc top " +
                   ids_to_string(top);
          });
    }

    for (auto [u, v] : g.edges()) {
      bool ok = hm.at(u, v) == 2 * ctx.subtree(u, v) - 1 &&
                hm.at(v, u) == 2 * ctx.subtree(v, u) - 1;
      acc.hitting_edge_identity.check(ok, instance, g, [&, u = u, v = v] {
        return "edge (" + std::to_string(u) + "," + std::to_string(v) +
               "): hitting time differs from 2|S|-1";
      });
    }

    for (auto [u, v] : g.edges()) {
      const Rational closed = tree_rwc_bridge_gap(g, u, v);
      const Rational solved = hm.column_sum(v) - hm.column_sum(u);
      acc.rwc_edge_gap.check(closed == solved, instance, g, [&, u = u, v = v] {
        return "edge (" + std::to_string(u) + "," + std::to_string(v) +
               "): closed-form gap " + to_string(closed) + " vs solver " +
               to_string(solved);
      });
    }

    for (int v = 0; v < n; ++v) {
      Rational sum = 0;
      for (int u = 0; u < n; ++u)
        if (u != v) {
          int64_t t = ctx.subtree(u, v);
          sum += t * (2 * t - 1);
        }
      acc.rwc_subtree_identity.check(sum == hm.column_sum(v), instance, g, [&] {
        return "node " + std::to_string(v) + ": subtree formula " +
               to_string(sum) + " vs solver " + to_string(hm.column_sum(v));
      });
    }

    acc.same_ranking_both.check(same_ranking(cl, rwcl), instance, g, [] {
      return std::string("closeness and rwc rankings differ");
    });
  }

  if (n <= 8) {
    const ScoreVector w = w_measure(ctx);
    bool weak_ok = true, slex_ok = true;
    for (int u = 0; u < n && (weak_ok || slex_ok); ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (pref_sign(pm, u, v) > 0 && w.values[u] <= w.values[v]) weak_ok = false;
        auto slex = shortlex_compare(lt_list(ctx, u), lt_list(ctx, v));
        int w_order = rational_sign(w.values[u], w.values[v]);
        // shortlex-smaller majority list means higher W score
        int expected = slex < 0 ? 1 : slex > 0 ? -1 : 0;
        if (w_order != expected) slex_ok = false;
      }
    acc.w_weak_cct.check(weak_ok, instance, g, [] {
      return std::string("strictly preferred node without strictly larger W");
    });
    acc.w_shortlex.check(slex_ok, instance, g, [] {
      return std::string("W order disagrees with shortlex order");
    });
  }
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.passed(); });
}

VerificationReport run_tree_suite(int n_max, int rwc_n_max, int measures_n_max) {
  if (n_max > kTreeEnumCap)
    throw std::invalid_argument("tree suite capped at n = " +
                                std::to_string(kTreeEnumCap));
  TreeClaims total;
  uint64_t offset = 0;
  for (int n = 2; n <= n_max; ++n) {
    const uint64_t count = labeled_tree_count(n);
    std::vector<TreeClaims> per_worker(worker_count());
#pragma omp parallel
    {
      TreeClaims& acc = per_worker[worker_id()];
#pragma omp for schedule(dynamic, 512)
      for (int64_t idx = 0; idx < static_cast<int64_t>(count); ++idx) {
        Graph g = labeled_tree_from_index(n, static_cast<uint64_t>(idx));
        check_one_tree(g, offset + static_cast<uint64_t>(idx), rwc_n_max,
                       measures_n_max, acc);
      }
    }
    for (const TreeClaims& acc : per_worker) total.merge(acc);
    offset += count;
  }

  VerificationReport report;
  report.suite = "trees";
  report.params = {{"n_max", std::to_string(n_max)},
                   {"rwc_n_max", std::to_string(rwc_n_max)},
                   {"measures_n_max", std::to_string(measures_n_max)},
                   {"trees", std::to_string(offset)}};
  auto add = [&](const char* name, const Accumulator& a) {
    report.claims.push_back({name, a.instances, a.violations, a.witness});
  };
  add("closeness-condorcet-consistent", total.closeness_consistent);
  add("strict-preference-transitive", total.preference_transitive);
  add("closeness-edge-gap-identity", total.closeness_edge_gap);
  add("closeness-subtree-identity", total.closeness_subtree_identity);
  add("split-matches-subtree-definition", total.split_matches_subtree);
  add("winners-agree-across-routes", total.winners_structural);
  add("path-compare-stable", total.path_compare_stable);
  add("structural-compare-agrees", total.structural_agrees);
  add("cc-implies-consistency", total.cc_implies_consistent);
  add("rwc-condorcet-consistent", total.rwc_consistent);
  add("hitting-bridge-identity", total.hitting_edge_identity);
  add("rwc-bridge-gap-identity", total.rwc_edge_gap);
  add("rwc-subtree-identity", total.rwc_subtree_identity);
  add("closeness-rwc-same-ranking", total.same_ranking_both);
  add("w-weak-general-cct", total.w_weak_cct);
  add("w-matches-shortlex", total.w_shortlex);
  return report;
}

// ---- graph suite ------------------------------------------------------------

namespace {

constexpr double kEdgeProbs[] = {0.15, 0.3, 0.5, 0.7, 0.85};
constexpr int kRandomWalkNMax = 12;

struct GraphClaims {
  Accumulator closeness_cc;
  Accumulator closeness_net_identity;
  Accumulator bridge_gap_closed_form;
  Accumulator return_time;

  void merge(const GraphClaims& o) {
    closeness_cc.merge(o.closeness_cc);
    closeness_net_identity.merge(o.closeness_net_identity);
    bridge_gap_closed_form.merge(o.bridge_gap_closed_form);
    return_time.merge(o.return_time);
  }
};

void check_one_graph(const Graph& g, uint64_t instance, GraphClaims& acc) {
  const int n = g.node_count();
  const DistanceMatrix dist = all_pairs_distances_serial(g);
  const PreferenceMatrix pm = preference_matrix(g, dist);
  const ScoreVector cl = closeness(g);

  auto cc = check_cc(g, pm, cl);
  acc.closeness_cc.check(cc.empty(), instance, g, [&] {
    return "closeness breaks edge comparison at (" + std::to_string(cc[0].u) +
           "," + std::to_string(cc[0].v) + ")";
  });

  for (auto [u, v] : g.edges()) {
    const Rational gap = 1 / cl.values[v] - 1 / cl.values[u];
    const int64_t net_gap = pm.at(u, v) - pm.at(v, u);
    acc.closeness_net_identity.check(gap == net_gap, instance, g, [&, u = u, v = v] {
      return "edge (" + std::to_string(u) + "," + std::to_string(v) +
             "): closeness gap " + to_string(gap) + " vs net gap " +
             std::to_string(net_gap);
    });
  }

  if (n <= kRandomWalkNMax && n >= 2) {
    const HittingMatrix hm = hitting_times_serial(g);
    for (auto [u, v] : g.edges()) {
      if (!is_bridge(g, u, v)) continue;
      const Rational closed = general_bridge_gap(g, u, v);
      const Rational solved = hm.column_sum(v) - hm.column_sum(u);
      acc.bridge_gap_closed_form.check(closed == solved, instance, g, [&, u = u, v = v] {
        return "bridge (" + std::to_string(u) + "," + std::to_string(v) +
               "): closed-form gap " + to_string(closed) + " vs solver " +
               to_string(solved);
      });
    }
    for (int v = 0; v < n; ++v) {
      Rational lhs = 0;
      for (int u : g.neighbors(v)) lhs += 1 + hm.at(u, v);
      lhs /= g.degree(v);
      acc.return_time.check(lhs == expected_return_time(g, v), instance, g, [&] {
        return "node " + std::to_string(v) + ": neighbor-average return " +
               to_string(lhs) + " vs 2|E|/deg " +
               to_string(expected_return_time(g, v));
      });
    }
  }
}

// Fixture regressions: each annotated claim re-checked from scratch.
void check_fixture_claims(Accumulator& acc) {
  uint64_t instance = 0;
  auto expect = [&](const Fixture& f, bool ok, const std::string& what) {
    acc.check(ok, instance++, f.graph, [&] { return f.name + ": " + what; });
  };

  {
    Fixture f = fixture("fig1");
    const int u = f.mark("u"), v = f.mark("v"), w = f.mark("w");
    const int x = f.mark("x"), y = f.mark("y");
    expect(f, f.graph.node_count() == 13 && f.graph.edge_count() == 15,
           "13 nodes / 15 edges");
    expect(f, distance_list(f.graph, v).counts == std::vector<int64_t>{2, 2, 4, 4},
           "distance list of v");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, condorcet_winner(pm) == v, "winner v");
    for (int s = 0; s < f.graph.node_count(); ++s)
      if (s != v)
        expect(f, compare(pm, v, s) == Preference::FirstPreferred,
               "v beats node " + std::to_string(s));
    expect(f, top_set(closeness(f.graph)) == std::vector{v}, "closeness top v");
    expect(f, top_set(harmonic(f.graph)) == std::vector{y}, "harmonic top y");
    expect(f, top_set(decay(f.graph, default_decay_delta())) == std::vector{w},
           "decay(4/5) top w");
    expect(f, top_set(degree(f.graph)) == std::vector({std::min(x, y), std::max(x, y)}),
           "degree top {x,y}");
    expect(f, eccentricity(f.graph).values[v] == Rational(1, 4), "ecc(v)=1/4");
    HittingMatrix hm = hitting_times(f.graph);
    expect(f, hm.at(u, v) == 17, "H(u,v)=17");
    expect(f, hm.at(v, u) == 13, "H(v,u)=13");
    expect(f, top_set(rw_closeness(f.graph, hm)) == std::vector{u}, "rwc top u");
  }
  {
    Fixture f = fixture("fig2");
    const int u = f.mark("u"), v = f.mark("v"), w = f.mark("w");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, pm.at(u, v) == 5, "net(u,v)=5");
    expect(f, pm.at(v, u) == 4, "net(v,u)=4");
    expect(f, pref_sign(pm, u, v) > 0 && pref_sign(pm, v, w) > 0 &&
               pref_sign(pm, w, u) > 0,
           "u>v>w>u");
    expect(f, !condorcet_winner(pm).has_value(), "no winner");
    auto cycle = find_condorcet_cycle(pm);
    bool valid = cycle.has_value() && cycle->size() >= 2;
    if (valid)
      for (size_t i = 0; i < cycle->size(); ++i)
        valid = valid && pref_sign(pm, (*cycle)[i],
                                   (*cycle)[(i + 1) % cycle->size()]) > 0;
    expect(f, valid, "a verified strict cycle is found");
  }
  {
    Fixture f = fixture("fig3");
    const int u = f.mark("u"), v = f.mark("v");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, condorcet_winner(pm) == v, "winner v");
    BridgeSplit split = bridge_split(f.graph, u, v);
    expect(f, split.side_u.size() == 5 && split.side_v.size() == 6,
           "|S_u|=5, |S_v|=6");
    expect(f, subtree_size(f.graph, u, v) == 5, "|T_u^v|=5");
    ScoreVector h = harmonic(f.graph);
    expect(f, h.values[u] == Rational(129, 20), "harmonic(u)=129/20");
    expect(f, h.values[v] == Rational(317, 60), "harmonic(v)=317/60");
    for (Measure m : {Measure::Degree, Measure::Harmonic, Measure::Decay})
      expect(f,
             check_condorcet_consistency(
                 pm, compute_measure(f.graph, m, default_decay_delta()))
                 .has_value(),
             std::string(measure_name(m)) + " violates consistency here");
    HittingMatrix hm = hitting_times(f.graph);
    expect(f, hm.at(u, v) == 9 && hm.at(v, u) == 11, "H identities on the bridge");
    expect(f, tree_rwc_bridge_gap(f.graph, u, v) == -21, "closed-form gap -21");
  }
  {
    Fixture f = fixture("fig4");
    const int u = f.mark("u"), v = f.mark("v");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, pm.at(u, v) == 4 && pm.at(v, u) == 3, "net 4 vs 3");
    ScoreVector cl = closeness(f.graph);
    expect(f, cl.values[u] == Rational(1, 14) && cl.values[v] == Rational(1, 13),
           "closeness 1/14 vs 1/13");
    expect(f, !check_weak_general_cct(f.graph, cl).empty(),
           "closeness fails weak general comparison");
  }
  {
    Fixture f = fixture("fig5");
    const int r = f.mark("r"), t = f.mark("t"), u = f.mark("u");
    const int v = f.mark("v"), w = f.mark("w");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, condorcet_winner(pm) == r, "winner r");
    expect(f, lt_list(f.graph, w).values == std::vector<int64_t>{6, 8},
           "majority list of w");
    expect(f, subtree_size(f.graph, f.mark("branch_left"), w) == 8,
           "|T_branch^w|=8");
    TreeContext ctx(f.graph);
    expect(f, tree_compare_structural(ctx, u, v) == Preference::Tie, "u ~ v");
    expect(f, tree_compare_structural(ctx, v, w) == Preference::Tie, "v ~ w");
    expect(f, tree_compare_structural(ctx, w, u) == Preference::FirstPreferred,
           "w > u");
    expect(f, level(f.graph, pm, u) == 2, "level(u)=2");
    ScoreVector wm = w_measure(f.graph);
    Ranking ranking = rank(wm);
    auto group_of = [&](int node) {
      for (size_t i = 0; i < ranking.groups.size(); ++i)
        for (int id : ranking.groups[i])
          if (id == node) return i;
      return ranking.groups.size();
    };
    expect(f, ranking.groups.front() == std::vector{r}, "W ranks r first");
    expect(f, group_of(f.mark("branch_left")) == 1 &&
               group_of(f.mark("branch_right")) == 1,
           "both branch children second");
    expect(f, group_of(t) == 2, "t third");
    expect(f, group_of(w) == 3, "w fourth");
    expect(f, group_of(u) == 4 && group_of(v) == 4, "u and v tied next");
    expect(f, group_of(f.mark("deep_leaf")) == ranking.groups.size() - 1 &&
               ranking.groups.back() == std::vector{f.mark("deep_leaf")},
           "deepest leaf last");
  }
  for (const char* name : {"fig6g", "fig6gp"}) {
    Fixture f = fixture(name);
    const int u = f.mark("u"), v = f.mark("v"), w = f.mark("w");
    expect(f, distance_list(f.graph, u).counts == std::vector<int64_t>{8, 1, 2},
           "distance list of u");
    expect(f, distance_list(f.graph, v).counts == std::vector<int64_t>{7, 4},
           "distance list of v");
    PreferenceMatrix pm = preference_matrix(f.graph);
    expect(f, condorcet_winner(pm) == f.mark("winner"), "expected winner");
    ScoreVector cl = closeness(f.graph);
    if (f.name == "fig6g")
      expect(f, 1 / cl.values[v] == 15 && 1 / cl.values[u] == 16 &&
                 1 / cl.values[w] == 17,
             "inverse closeness 15/16/17");
    expect(f, top_set(cl) == std::vector{v}, "closeness top v");
    expect(f, top_set(rw_closeness(f.graph)) == std::vector{f.mark("winner")},
           "rwc top = winner");
  }
}

}  // namespace

VerificationReport run_graph_suite(uint64_t samples, int n_max, uint64_t seed) {
  GraphClaims total;
  std::vector<GraphClaims> per_worker(worker_count());
#pragma omp parallel
  {
    GraphClaims& acc = per_worker[worker_id()];
#pragma omp for schedule(dynamic, 64)
    for (int64_t i = 0; i < static_cast<int64_t>(samples); ++i) {
      const uint64_t inst_seed = instance_seed(seed, static_cast<uint64_t>(i));
      Xorshift64Star rng(inst_seed);
      const int n = 2 + static_cast<int>(rng.below(n_max - 1));
      const double p = kEdgeProbs[i % std::size(kEdgeProbs)];
      Graph g = random_connected_graph(n, p, inst_seed);
      check_one_graph(g, static_cast<uint64_t>(i), acc);
    }
  }
  for (const GraphClaims& acc : per_worker) total.merge(acc);

  Accumulator fixtures;
  check_fixture_claims(fixtures);

  VerificationReport report;
  report.suite = "graphs";
  report.params = {{"samples", std::to_string(samples)},
                   {"n_max", std::to_string(n_max)},
                   {"seed", std::to_string(seed)}};
  auto add = [&](const char* name, const Accumulator& a) {
    report.claims.push_back({name, a.instances, a.violations, a.witness});
  };
  add("closeness-edge-comparison", total.closeness_cc);
  add("closeness-net-identity", total.closeness_net_identity);
  add("bridge-gap-matches-solver", total.bridge_gap_closed_form);
  add("return-time-consistency", total.return_time);
  add("fixture-claims", fixtures);
  return report;
}

// ---- counterexample search -----------------------------------------------------

namespace {

// Empty result means no violation on this instance.
std::string violation_detail(const Graph& g, const SearchOptions& o) {
  ScoreVector scores = compute_measure(g, o.measure, o.delta);
  if (o.axiom == "condorcet-consistency") {
    auto v = check_condorcet_consistency(g, scores);
    if (!v) return {};
    return "winner " + std::to_string(v->winner) + " but top " +
           ids_to_string(v->top);
  }
  if (o.axiom == "cc") {
    auto v = check_cc(g, scores);
    if (v.empty()) return {};
    return "edge (" + std::to_string(v[0].u) + "," + std::to_string(v[0].v) +
           "): net sign " + std::to_string(v[0].net_sign) + ", score sign " +
           std::to_string(v[0].score_sign);
  }
  if (o.axiom == "bridge") {
    auto v = check_bridge_axiom(g, scores);
    if (v.empty()) return {};
    return "bridge (" + std::to_string(v[0].u) + "," + std::to_string(v[0].v) +
           "): sides " + std::to_string(v[0].side_u) + "/" +
           std::to_string(v[0].side_v) + ", score sign " +
           std::to_string(v[0].score_sign);
  }
  if (o.axiom == "weak-general-cct") {
    auto v = check_weak_general_cct(g, scores);
    if (v.empty()) return {};
    return "pair (" + std::to_string(v[0].u) + "," + std::to_string(v[0].v) +
           ") preferred without larger score";
  }
  throw std::invalid_argument("unknown axiom \"" + o.axiom + "\"");
}

bool admissible(const Graph& g, const SearchOptions& o) {
  if (g.node_count() < 2) return false;
  return o.domain == "trees" ? is_tree(g) : is_connected(g);
}

// Greedy node deletion that keeps the violation alive.
Graph minimize_witness(Graph g, const SearchOptions& o) {
  bool improved = true;
  while (improved && g.node_count() > 2) {
    improved = false;
    for (int drop = 0; drop < g.node_count(); ++drop) {
      std::vector<int> keep;
      keep.reserve(g.node_count() - 1);
      for (int v = 0; v < g.node_count(); ++v)
        if (v != drop) keep.push_back(v);
      Graph candidate = g.induced(keep);
      if (!admissible(candidate, o)) continue;
      try {
        if (violation_detail(candidate, o).empty()) continue;
      } catch (const std::exception&) {
        continue;
      }
      g = std::move(candidate);
      improved = true;
      break;
    }
  }
  return g;
}

}  // namespace

SearchResult search_counterexample(const SearchOptions& o) {
  if (o.axiom != "condorcet-consistency" && o.axiom != "cc" &&
      o.axiom != "bridge" && o.axiom != "weak-general-cct")
    throw std::invalid_argument("unknown axiom \"" + o.axiom + "\"");
  if (o.domain != "trees" && o.domain != "graphs")
    throw std::invalid_argument("unknown domain \"" + o.domain + "\"");
  if (o.axiom == "weak-general-cct" && o.domain != "trees")
    throw std::invalid_argument("weak-general-cct only applies to trees");
  if (o.measure == Measure::WMeasure && o.domain != "trees")
    throw std::invalid_argument("the W measure only applies to trees");
  const int n_min = o.domain == "trees" ? 4 : 5;
  if (o.n_max < n_min) throw std::invalid_argument("n_max too small");

  SearchResult result;
  for (uint64_t i = 0; i < o.budget; ++i) {
    const uint64_t inst_seed = instance_seed(o.seed, i);
    Xorshift64Star rng(inst_seed);
    const int n = n_min + static_cast<int>(rng.below(o.n_max - n_min + 1));
    Graph g = o.domain == "trees"
                  ? random_labeled_tree(n, rng)
                  : random_connected_graph(n, kEdgeProbs[i % std::size(kEdgeProbs)],
                                           inst_seed);
    ++result.examined;
    std::string detail = violation_detail(g, o);
    if (detail.empty()) continue;
    Graph minimized = minimize_witness(std::move(g), o);
    std::string final_detail = violation_detail(minimized, o);
    if (final_detail.empty())
      throw std::logic_error("witness lost during minimization");
    result.witness = Witness{format_edge_list(minimized), final_detail, i};
    return result;
  }
  return result;
}

}  // namespace ccent
