#include "ccent/fixtures.hpp"

#include <stdexcept>

namespace ccent {

int Fixture::mark(std::string_view key) const {
  auto it = marks.find(std::string(key));
  if (it == marks.end())
    throw std::invalid_argument("fixture " + name + " has no mark \"" +
                                std::string(key) + "\"");
  return it->second;
}

namespace {

// fig1: a triangle-plus-hub blob joined by a path to a star with a short
// tail; the five marked nodes are each ranked first by a different measure.
Fixture make_fig1() {
  Graph g(13, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4},
               {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {8, 10}, {8, 11},
               {11, 12}});
  return {"fig1", std::move(g),
          {{"x", 3}, {"u", 5}, {"v", 6}, {"w", 7}, {"y", 8}, {"winner", 6}}};
}

// fig2: three fused four-cycles; head-to-head preferences cycle u > v > w > u.
Fixture make_fig2() {
  Graph g(12, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}, {0, 6},
               {6, 7}, {7, 1}, {6, 1}, {1, 8}, {8, 9}, {9, 2}, {8, 2},
               {2, 10}, {10, 11}, {11, 0}, {10, 0}});
  return {"fig2", std::move(g), {{"v", 0}, {"u", 1}, {"w", 2}}};
}

// fig3: hub u with four leaves against a five-node path; the path-side
// neighbor v wins head-to-head while u tops most measures.
Fixture make_fig3() {
  Graph g(11, {{6, 9}, {6, 8}, {6, 7}, {5, 6}, {4, 5}, {3, 4}, {2, 3},
               {1, 2}, {0, 1}, {6, 10}});
  return {"fig3", std::move(g), {{"v", 5}, {"u", 6}, {"winner", 5}}};
}

// fig4: leaf u on a three-leaf hub, v two steps down a tail path; u is
// preferred yet has strictly lower closeness.
Fixture make_fig4() {
  Graph g(7, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  return {"fig4", std::move(g), {{"u", 0}, {"v", 5}, {"hub", 3}, {"winner", 3}}};
}

// fig5: rooted tree where the head-to-head relation is intransitive off the
// winner (u ~ v, v ~ w, w > u).
Fixture make_fig5() {
  Graph g(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {5, 6}, {2, 7},
               {2, 9}, {2, 8}});
  return {"fig5", std::move(g),
          {{"r", 0},
           {"t", 3},
           {"u", 4},
           {"w", 5},
           {"v", 7},
           {"branch_left", 1},
           {"branch_right", 2},
           {"deep_leaf", 6},
           {"winner", 0}}};
}

// fig6g / fig6gp: same distance lists at u and v, opposite Condorcet winners.
Fixture make_fig6g() {
  Graph g(12, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
               {1, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {2, 11}, {2, 6},
               {2, 7}, {2, 8}, {2, 9}, {2, 10}});
  return {"fig6g", std::move(g), {{"u", 0}, {"w", 1}, {"v", 2}, {"winner", 0}}};
}

Fixture make_fig6gp() {
  Graph g(12, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {0, 5},
               {0, 6}, {0, 7}, {0, 8}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
               {2, 9}, {9, 10}, {9, 11}, {0, 2}});
  return {"fig6gp", std::move(g), {{"u", 0}, {"w", 1}, {"v", 2}, {"winner", 2}}};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fig1", "fig2", "fig3", "fig4", "fig5", "fig6g", "fig6gp"};
  return names;
}

Fixture fixture(std::string_view name) {
  if (name == "fig1") return make_fig1();
  if (name == "fig2") return make_fig2();
  if (name == "fig3") return make_fig3();
  if (name == "fig4") return make_fig4();
  if (name == "fig5") return make_fig5();
  if (name == "fig6g") return make_fig6g();
  if (name == "fig6gp") return make_fig6gp();
  throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace ccent
