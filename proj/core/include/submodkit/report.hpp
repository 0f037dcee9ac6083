#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submodkit/hypercube.hpp"
#include "submodkit/inequality_lab.hpp"
#include "submodkit/predicates.hpp"

namespace submodkit {

/// Full per-distance analysis of a code set, the payload of the
/// `hypercube` and `influence` front-ends.
struct HypercubeAnalysis {
    int n = 0;
    std::uint64_t size = 0;
    int tau = 0;
    GraphStats stats;
    std::vector<BoundReport> per_d;
    std::vector<InfluenceBounds> influence_per_d;
    TotalEdgeBound totals;
    std::optional<D1Identity> d1;
};

HypercubeAnalysis analyze_code_set(const CodeSet& A, int tau,
                                   double tol = kDefaultTol);

struct PredicateEntry {
    std::string name;
    PredicateVerdict verdict;
    std::string witness_text;  // rendered with ground-set labels
};

struct SequenceEntry {
    std::string name;
    SequenceReport report;
};

/// One analysis run, assembled by the front-end and rendered as JSON or
/// aligned text. JSON key order is fixed so identical runs are
/// byte-identical and re-rendering a parsed document reproduces it.
struct Document {
    std::string type;  // setfn | pmf | codeset | points
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> notes;
    std::vector<PredicateEntry> predicates;
    std::vector<SequenceEntry> sequences;
    std::vector<InequalityCheck> checks;
    std::optional<HypercubeAnalysis> hypercube;
    std::optional<ProjectionReport> projection;
    int projection_k = 0;
};

std::string to_json(const Document& doc);
std::string to_text(const Document& doc);

/// False when any verdict in the document is a violation.
bool document_holds(const Document& doc);

}  // namespace submodkit
