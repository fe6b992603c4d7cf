#pragma once

#include "probedf/graph.hpp"
#include "probedf/instrument.hpp"

namespace probedf {

/// Bipartite incidence structure between component representatives and the
/// candidate nonprobe vertices. Representative a stands for one non-special
/// neighborhood component: rep[a] = (i, j) with i the anchor whose
/// neighborhood contains the component and j the minimum clique vertex
/// (j > i, and ij is an edge of G).
struct AuxBipartite {
    std::vector<std::pair<int, int>> rep;
    std::vector<std::vector<int>> adj_a;  // representative -> stable-side vertices, ascending
    std::vector<std::vector<int>> adj_n;  // graph vertex -> representative ids, ascending
    int rep_count() const { return (int)rep.size(); }
    long long edge_count() const {
        long long m = 0;
        for (const auto& s : adj_a) m += (long long)s.size();
        return m;
    }
};

/// Requires every neighborhood component of g to be complete split. One
/// representative per component with |S| >= 2 whose minimum clique vertex
/// exceeds the anchor, so each diamond clique is represented exactly once.
AuxBipartite build_aux(const Graph& g, Instrumentation* stats = nullptr);

/// Five vertices [x,u,z,y,r] where {x,u,z,y} induce a diamond with tips x,y
/// and r is adjacent to exactly the tips. nonprobes must be the independent
/// tip set; the scan counts, per candidate r outside it, representatives seen
/// from two tips in N(r).
std::optional<std::array<int, 5>> detect_h4(const Graph& g, const std::vector<int>& nonprobes,
                                            const AuxBipartite& aux,
                                            Instrumentation* stats = nullptr);

/// Six-cycle [s, a1, s', a2, s'', a3] alternating between graph vertices and
/// representative ids, found by depth-3 BFS from each graph-vertex side
/// source ascending. Requires the structure to be free of 4-cycles (throws
/// std::logic_error if one is encountered); in that case every 6-cycle is
/// induced.
std::optional<std::array<int, 6>> find_six_cycle(const AuxBipartite& aux, int n,
                                                 Instrumentation* stats = nullptr);

}  // namespace probedf
