#include "probedf/aux_bipartite.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "probedf/complete_split.hpp"

namespace probedf {

AuxBipartite build_aux(const Graph& g, Instrumentation* stats) {
    int n = g.vertex_count();
    AuxBipartite b;
    b.adj_n.resize(n);
    for (int i = 0; i < n; ++i) {
        if (stats) {
            long long cost = g.degree(i);
            for (int u : g.neighbors(i)) cost += g.degree(u);
            stats->neighborhood_scans += cost;
        }
        for (const auto& comp : neighborhood_components(g, i)) {
            auto part = csda(comp.vertices, comp.local_degree);
            assert(part && "caller must have established local complete-split structure");
            if (part->stable.size() < 2) continue;
            assert(!part->clique.empty());
            int j = part->clique[0];
            if (j <= i) continue;
            int a = b.rep_count();
            b.rep.emplace_back(i, j);
            b.adj_a.push_back(part->stable);
            for (int s : part->stable) b.adj_n[s].push_back(a);
        }
    }
    return b;
}

std::optional<std::array<int, 5>> detect_h4(const Graph& g, const std::vector<int>& nonprobes,
                                            const AuxBipartite& aux, Instrumentation* stats) {
    int n = g.vertex_count();
    std::vector<char> is_nonprobe(n, 0);
    for (int v : nonprobes) is_nonprobe[v] = 1;

    std::vector<int> cnt(aux.rep_count(), 0);
    std::vector<int> wit1(aux.rep_count(), -1), wit2(aux.rep_count(), -1);
    std::vector<int> touched;

    for (int r = 0; r < n; ++r) {
        if (is_nonprobe[r]) continue;
        touched.clear();
        if (stats) stats->aux_edges_touched += g.degree(r);
        for (int x : g.neighbors(r)) {
            if (!is_nonprobe[x]) continue;
            if (stats) stats->aux_edges_touched += (long long)aux.adj_n[x].size();
            for (int a : aux.adj_n[x]) {
                if (cnt[a] == 0) {
                    cnt[a] = 1;
                    wit1[a] = x;
                    touched.push_back(a);
                } else if (cnt[a] == 1) {
                    cnt[a] = 2;
                    wit2[a] = x;
                }
            }
        }
        for (int a : touched) {
            if (cnt[a] == 2) {
                auto [u, z] = aux.rep[a];
                if (!g.adjacent(r, u) && !g.adjacent(r, z))
                    return std::array<int, 5>{wit1[a], u, z, wit2[a], r};
            }
        }
        for (int a : touched) {
            cnt[a] = 0;
            wit1[a] = wit2[a] = -1;
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 6>> find_six_cycle(const AuxBipartite& aux, int n,
                                                 Instrumentation* stats) {
    // Depth-3 BFS from each source on the vertex side, ascending. A cross edge
    // between two level-2 vertices' scans closing at level 3 yields a 6-cycle;
    // any shortcut to level 1 would close a 4-cycle, which the caller has
    // already excluded.
    std::vector<int> level_n(n, -1), level_a(aux.rep_count(), -1);
    std::vector<int> parent_n(n, -1), parent_a(aux.rep_count(), -1);
    std::vector<int> lvl1, lvl2, touched_a;

    for (int s = 0; s < n; ++s) {
        if (aux.adj_n[s].empty()) continue;
        lvl1.clear();
        lvl2.clear();
        touched_a.clear();
        level_n[s] = 0;

        for (int a : aux.adj_n[s]) {
            level_a[a] = 1;
            parent_a[a] = s;
            lvl1.push_back(a);
            touched_a.push_back(a);
        }
        if (stats) stats->bfs_dequeues += 1 + (long long)lvl1.size();
        for (int a : lvl1) {
            if (stats) stats->aux_edges_touched += (long long)aux.adj_a[a].size();
            for (int t : aux.adj_a[a]) {
                if (t == s) continue;
                if (level_n[t] == 2)
                    throw std::logic_error("4-cycle in the bipartite structure");
                level_n[t] = 2;
                parent_n[t] = a;
                lvl2.push_back(t);
            }
        }
        std::optional<std::array<int, 6>> found;
        if (stats) stats->bfs_dequeues += (long long)lvl2.size();
        for (int t : lvl2) {
            if (stats) stats->aux_edges_touched += (long long)aux.adj_n[t].size();
            for (int a : aux.adj_n[t]) {
                if (a == parent_n[t]) continue;
                if (level_a[a] == 1)
                    throw std::logic_error("4-cycle in the bipartite structure");
                if (level_a[a] == 3) {
                    if (parent_a[a] == t) continue;
                    int tb = parent_a[a];
                    if (parent_n[tb] == parent_n[t])
                        throw std::logic_error("4-cycle in the bipartite structure");
                    found = std::array<int, 6>{s, parent_n[t], t, a, tb, parent_n[tb]};
                    break;
                }
                level_a[a] = 3;
                parent_a[a] = t;
                touched_a.push_back(a);
            }
            if (found) break;
        }

        level_n[s] = -1;
        for (int t : lvl2) level_n[t] = -1;
        for (int a : touched_a) {
            level_a[a] = -1;
            parent_a[a] = -1;
        }
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace probedf
