#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

// A named reference graph with its marked nodes ("u", "v", "winner", ...).
// The verification suites re-check every annotated claim on load.
struct Fixture {
  std::string name;
  Graph graph;
  std::map<std::string, int> marks;

  int mark(std::string_view key) const;
};

const std::vector<std::string>& fixture_names();
Fixture fixture(std::string_view name);  // throws on unknown names

}  // namespace ccent
