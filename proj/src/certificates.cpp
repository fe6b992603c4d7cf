#include "probedf/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace probedf {

namespace {

ObstructionTemplate make(int ind, const char* name, int order, std::vector<int> codes) {
    ObstructionTemplate t{ind, name, order, {}};
    for (int c : codes) t.edges.emplace_back(c / 10, c % 10);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

std::vector<ObstructionTemplate> build_table() {
    std::vector<ObstructionTemplate> t;
    t.push_back(make(1, "gem", 5, {12, 13, 14, 15, 23, 24, 35}));
    t.push_back(make(2, "W4", 5, {12, 13, 14, 15, 23, 24, 35, 45}));
    t.push_back(make(3, "P3+2K1-complement", 5, {12, 13, 14, 15, 23, 24, 25, 34}));
    t.push_back(make(4, "S1", 7, {12, 13, 14, 15, 16, 23, 27, 37, 45, 46}));
    t.push_back(make(5, "S4", 5, {12, 13, 15, 23, 24, 34, 45}));
    t.push_back(make(6, "S2", 7, {12, 13, 14, 15, 23, 26, 36, 45, 57, 47, 67}));
    t.push_back(make(7, "T1", 8, {12, 13, 17, 23, 27, 34, 45, 46, 56, 58, 68}));
    t.push_back(make(8, "T2", 8, {12, 13, 14, 17, 25, 26, 28, 34, 37, 45, 56, 68}));
    t.push_back(make(9, "T3", 8, {12, 13, 14, 23, 24, 35, 46, 57, 58, 67, 68, 78}));
    t.push_back(make(10, "T4", 8, {12, 13, 14, 18, 23, 28, 35, 46, 47, 56, 57, 67}));
    t.push_back(make(11, "T5", 8, {12, 13, 15, 17, 24, 25, 27, 34, 36, 38, 46, 48, 56}));
    t.push_back(make(12, "T6", 8, {12, 13, 14, 18, 24, 25, 28, 35, 36, 37, 46, 57, 67}));
    t.push_back(make(13, "T7", 8, {12, 13, 14, 15, 26, 27, 28, 34, 35, 46, 57, 68, 78}));
    t.push_back(make(14, "T8", 8, {13, 14, 15, 16, 23, 24, 27, 28, 35, 47, 56, 68, 78}));
    t.push_back(make(15, "T9", 8, {12, 13, 15, 16, 24, 25, 26, 34, 37, 38, 47, 48, 57, 68}));
    t.push_back(make(16, "T10", 8, {12, 13, 15, 16, 25, 26, 27, 34, 37, 38, 45, 47, 48, 68}));
    t.push_back(make(17, "S3", 9,
                     {14, 15, 16, 17, 24, 25, 28, 29, 36, 37, 38, 39, 45, 67, 89}));
    return t;
}

}  // namespace

const std::vector<ObstructionTemplate>& obstruction_templates() {
    static const std::vector<ObstructionTemplate> table = build_table();
    return table;
}

const ObstructionTemplate& obstruction_template(int indicator) {
    if (indicator < 1 || indicator > 17)
        throw std::out_of_range("indicator must be in 1..17");
    return obstruction_templates()[indicator - 1];
}

Graph template_graph(int indicator) {
    const auto& t = obstruction_template(indicator);
    std::vector<Edge> edges;
    for (auto [i, j] : t.edges) edges.emplace_back(i - 1, j - 1);
    return Graph(t.order, edges);
}

bool verify_negative(const Graph& g, int indicator, std::span<const int> vertices) {
    if (indicator < 1 || indicator > 17) return false;
    const auto& t = obstruction_template(indicator);
    if ((int)vertices.size() != t.order) return false;
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) return false;
    return induced_ordered(g, vertices) == t.edges;
}

bool verify_positive(const Graph& g, std::span<const int> probes, std::span<const int> nonprobes,
                     std::span<const Edge> completion) {
    int n = g.vertex_count();
    std::vector<int> side(n, 0);
    for (int v : probes) {
        if (v < 0 || v >= n || side[v]) return false;
        side[v] = 1;
    }
    for (int v : nonprobes) {
        if (v < 0 || v >= n || side[v]) return false;
        side[v] = 2;
    }
    for (int v = 0; v < n; ++v)
        if (!side[v]) return false;
    for (int u : nonprobes)
        for (int v : g.neighbors(u))
            if (side[v] == 2) return false;
    std::vector<Edge> extra;
    for (auto [u, v] : completion) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
        if (side[u] != 2 || side[v] != 2) return false;
        if (g.adjacent(u, v)) return false;
        extra.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(extra.begin(), extra.end());
    if (std::adjacent_find(extra.begin(), extra.end()) != extra.end()) return false;
    return is_diamond_free(g.with_edges(extra));
}

}  // namespace probedf
