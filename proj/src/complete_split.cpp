#include "probedf/complete_split.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace probedf {

std::optional<CompleteSplitPartition> csda(std::span<const int> vertices,
                                           std::span<const int> degrees) {
    int c = (int)vertices.size();
    CompleteSplitPartition part;
    if (c == 0) return part;

    bool complete = true, edgeless = true;
    for (int i = 0; i < c; ++i) {
        if (degrees[i] != c - 1) complete = false;
        if (degrees[i] != 0) edgeless = false;
    }
    if (complete) {
        part.stable.push_back(vertices[0]);
        part.clique.assign(vertices.begin() + 1, vertices.end());
        return part;
    }
    if (edgeless) {
        part.stable.assign(vertices.begin(), vertices.end());
        return part;
    }

    int k = 0;
    for (int i = 0; i < c; ++i)
        if (degrees[i] == c - 1) ++k;
    if (k == 0) return std::nullopt;
    for (int i = 0; i < c; ++i) {
        if (degrees[i] == c - 1)
            part.clique.push_back(vertices[i]);
        else if (degrees[i] == k)
            part.stable.push_back(vertices[i]);
        else
            return std::nullopt;
    }
    return part;
}

std::optional<CompleteSplitPartition> csda(const Graph& g) {
    std::vector<int> verts(g.vertex_count()), degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        verts[v] = v;
        degs[v] = g.degree(v);
    }
    return csda(verts, degs);
}

std::pair<int, std::array<int, 4>> stopped_bfs(const Graph& g, std::span<const int> members,
                                               int z, int x, int y) {
    assert(g.adjacent(x, y) && !g.adjacent(z, x) && !g.adjacent(z, y));
    std::vector<int> parent(g.vertex_count(), -2);
    for (int v : members) parent[v] = -1;  // -1 = member, unvisited
    assert(parent[z] == -1 && parent[x] == -1 && parent[y] == -1);

    std::deque<int> queue{z};
    parent[z] = z;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nb : g.neighbors(cur)) {
            if (parent[nb] != -1) continue;
            if (nb == x || nb == y) {
                int a = nb, b = (nb == x) ? y : x;
                int c = cur, d = parent[c];
                if (!g.adjacent(c, b)) return {1, {c, a, d, b}};
                return {3, {c, a, b, d}};
            }
            parent[nb] = cur;
            queue.push_back(nb);
        }
    }
    assert(false && "targets unreachable; preconditions violated");
    return {0, {}};
}

std::pair<int, std::array<int, 5>> non_complete_split(const Graph& g, int anchor,
                                                      const NeighborhoodComponent& comp) {
    int c = (int)comp.vertices.size();
    std::vector<char> in_y(g.vertex_count(), 0);
    std::vector<int> y_list;
    for (int i = 0; i < c; ++i)
        if (comp.local_degree[i] < c - 1) {
            in_y[comp.vertices[i]] = 1;
            y_list.push_back(comp.vertices[i]);
        }

    // First edge inside Y, ascending. One exists: otherwise the component
    // would be complete split (Y independent, complement a universal clique).
    int a = -1, b = -1;
    for (int u : y_list) {
        for (int nb : g.neighbors(u))
            if (in_y[nb]) {
                a = u;
                b = nb;
                break;
            }
        if (a >= 0) break;
    }
    assert(a >= 0);

    auto min_nonneighbor = [&](int of) {
        for (int u : y_list)
            if (u != of && !g.adjacent(of, u)) return u;
        assert(false && "degree bound guarantees a non-neighbor inside Y");
        return -1;
    };

    int ap = min_nonneighbor(a);
    int ind;
    std::array<int, 4> body{};
    if (!g.adjacent(ap, b)) {
        std::tie(ind, body) = stopped_bfs(g, comp.vertices, ap, a, b);
    } else {
        int bp = min_nonneighbor(b);
        if (!g.adjacent(bp, a)) {
            std::tie(ind, body) = stopped_bfs(g, comp.vertices, bp, a, b);
        } else {
            body = {a, b, bp, ap};
            ind = g.adjacent(ap, bp) ? 2 : 1;
        }
    }
    return {ind, {anchor, body[0], body[1], body[2], body[3]}};
}

}  // namespace probedf
