#pragma once

#include "probedf/graph.hpp"
#include "probedf/instrument.hpp"

namespace probedf {

/// Outcome of a recognition run. Exactly one of the two branches is filled:
/// a negative answer carries an indicator and an ordered vertex sequence
/// inducing that forbidden subgraph; a positive answer carries the probe /
/// nonprobe split and the completion edge set.
struct Certificate {
    bool member = false;
    // negative branch
    int indicator = 0;
    std::vector<int> vertices;
    int d1_score = -1;  // first-diamond cross score, set for indicators 7..16
    // positive branch
    std::vector<int> probes;
    std::vector<int> nonprobes;
    std::vector<Edge> completion;
};

/// Full pipeline: local complete-split verification with role assignment,
/// nonprobe independence check, then the bipartite incidence structure with
/// the five-vertex and nine-vertex searches. O(nm) overall.
Certificate recognize(const Graph& g, Instrumentation* stats = nullptr);

}  // namespace probedf
