#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "gracelab/graph.hpp"

namespace gracelab {

struct SearchBudget {
    std::int64_t max_nodes = 1'000'000;
    std::chrono::milliseconds time_limit = std::chrono::seconds(10);
};

enum class SearchStatus {
    Found,          // a labeling was found (and re-verified before returning)
    ExhaustedNone,  // full space explored within budget: no labeling exists
    Indeterminate,  // budget ran out first; carries no existence information
};

std::string search_status_name(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<Labeling> labeling;  // present iff status == Found
    std::int64_t nodes_expanded = 0;
};

// Backtracking search for a graceful labeling.  Vertices are assigned in
// degree-descending order (ties by input order), candidate values ascending,
// pruning on vertex/edge label collisions.  The complement symmetry
// f -> q - f is broken by capping the first assigned vertex at floor(q/2).
// Deterministic: identical inputs give identical outcomes and node counts.
SearchOutcome find_graceful(const Graph& g, const SearchBudget& budget = {});

// Backtracking search for an alpha labeling.  Returns ExhaustedNone
// immediately (nodes_expanded = 0) if the graph is not bipartite.  Otherwise
// tries every assignment of the bipartition classes to the low (U) / high
// (V) side -- the first component's class 0 is pinned to U, which already
// quotients the complement symmetry -- and prunes on the boundary condition
// max(U) < min(V) incrementally.
SearchOutcome find_alpha(const Graph& g, const SearchBudget& budget = {});

// Independent existence check: enumerate every injection of vertices into
// {0..q} with no pruning at all and test each for gracefulness.  Only legal
// for q <= 8 (throws ValidationError above that).  Used to cross-check the
// pruned search on small graphs.
SearchOutcome cross_check_enumeration(const Graph& g);

}  // namespace gracelab
