#pragma once

#include <json.hpp>

#include "ccent/canonical.hpp"
#include "ccent/centrality.hpp"
#include "ccent/condorcet.hpp"
#include "ccent/fixtures.hpp"
#include "ccent/random_walk.hpp"
#include "ccent/verify.hpp"

namespace ccent {

// Insertion-ordered JSON keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

Json score_to_json(const ScoreVector& scores, bool include_normalized = false);
Json hitting_to_json(const HittingMatrix& hitting);
Json condorcet_report_to_json(const CondorcetReport& report);
Json fixture_to_json(const Fixture& fixture);
Json marked_graph_to_json(const MarkedGraph& marked);
Json canonical_to_json(const CanonicalList& canonical);
Json reduction_to_json(const ReductionResult& reduction);
Json verification_report_to_json(const VerificationReport& report);
Json search_result_to_json(const SearchOptions& options,
                           const SearchResult& result);

}  // namespace ccent
