#pragma once

#include "probedf/graph.hpp"

namespace probedf {

struct OracleVerdict {
    bool member = false;
    int indicator = 0;             // set when an obstruction was found
    std::vector<int> obstruction;  // vertices in template position order
};

/// First induced copy of the given template, mapped position by position
/// (subset enumeration with degree-multiset prefilter, then backtracking).
std::optional<std::vector<int>> find_induced(const Graph& g, int indicator);

/// Membership by exhaustive forbidden-subgraph search over all 17 templates,
/// in indicator order. Intended for small n (subset scan).
OracleVerdict oracle_forbidden(const Graph& g);

struct CompletionVerdict {
    bool member = false;
    std::vector<int> nonprobes;
    std::vector<Edge> completion;
};

/// Membership by exhaustive search over independent vertex subsets N with a
/// forced completion: every surviving diamond pins its tip pair, so per N the
/// completion is a deterministic closure. With exhaustive_f, small instances
/// instead enumerate every edge subset inside N as a cross-check.
CompletionVerdict oracle_completion(const Graph& g, bool exhaustive_f = false);

/// The unique forced completion for a fixed nonprobe set, or nullopt when a
/// diamond's tip lands outside it.
std::optional<std::vector<Edge>> completion_closure(const Graph& g,
                                                    const std::vector<int>& nonprobes);

/// All induced diamonds by 4-subset scan, each as [tip, nontip, nontip, tip]
/// with both pairs ascending.
std::vector<std::array<int, 4>> enumerate_diamonds(const Graph& g);

std::vector<int> diamond_tips(const Graph& g);
std::vector<Edge> cotip_pairs(const Graph& g);

}  // namespace probedf
