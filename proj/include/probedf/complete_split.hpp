#pragma once

#include "probedf/graph.hpp"

namespace probedf {

struct CompleteSplitPartition {
    std::vector<int> clique;  // K, ascending
    std::vector<int> stable;  // S, ascending
    bool special() const { return stable.size() == 1; }
};

/// Degree-based complete split recognition. `vertices` and `degrees` describe
/// one graph (typically a connected neighborhood component); degrees are taken
/// within it. Accepts exactly when the degree multiset is one of:
///   all n-1 (complete; S = minimum vertex), all 0 (edgeless; K empty), or
///   {n-1, k} with k = #degree-(n-1) vertices (K = those, S = rest).
std::optional<CompleteSplitPartition> csda(std::span<const int> vertices,
                                           std::span<const int> degrees);
std::optional<CompleteSplitPartition> csda(const Graph& g);

/// BFS inside g[members] from z, stopping at the first of {x, y} reached,
/// where xy is an edge and z is adjacent to neither. With a = the vertex
/// reached, b = the other, c = a's predecessor and d = c's predecessor:
/// returns (1, [c,a,d,b]) when cb is a non-edge (an induced P4) and
/// (3, [c,a,b,d]) otherwise (an induced paw), both in certificate order.
std::pair<int, std::array<int, 4>> stopped_bfs(const Graph& g, std::span<const int> members,
                                               int z, int x, int y);

/// comp is a connected neighborhood component of `anchor` that failed csda.
/// Returns an indicator and five vertices starting with the anchor whose
/// induced subgraph matches template 1, 2 or 3.
std::pair<int, std::array<int, 5>> non_complete_split(const Graph& g, int anchor,
                                                      const NeighborhoodComponent& comp);

}  // namespace probedf
