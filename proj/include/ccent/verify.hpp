#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccent/measures.hpp"

namespace ccent {

struct Witness {
  std::string edge_list;
  std::string detail;
  uint64_t instance = 0;
};

struct ClaimResult {
  std::string claim;
  uint64_t instances = 0;
  uint64_t violations = 0;
  std::optional<Witness> witness;  // earliest-instance witness when failing
  bool passed() const { return violations == 0; }
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ClaimResult> claims;
  bool all_passed() const;
};

// Every labeled tree on 2..n_max nodes; random-walk claims run up to
// rwc_n_max and the all-measures consistency claim up to measures_n_max.
// Work is sharded over trees with OpenMP; reports do not depend on the
// thread count.
VerificationReport run_tree_suite(int n_max = kTreeEnumCap, int rwc_n_max = 8,
                                  int measures_n_max = 7);

// Random connected graphs (deterministic in `seed`) plus the fixture
// regressions.  Random-walk cross-checks run on the instances with at most
// twelve nodes.
VerificationReport run_graph_suite(uint64_t samples = 10000, int n_max = 30,
                                   uint64_t seed = 1);

struct SearchOptions {
  Measure measure = Measure::Closeness;
  Rational delta = default_decay_delta();
  std::string axiom = "condorcet-consistency";  // cc | bridge | weak-general-cct
  std::string domain = "trees";                 // trees | graphs
  int n_max = 11;
  uint64_t budget = 20000;
  uint64_t seed = 1;
};

struct SearchResult {
  std::optional<Witness> witness;  // minimized and re-verified
  uint64_t examined = 0;
};

SearchResult search_counterexample(const SearchOptions& options);

}  // namespace ccent
