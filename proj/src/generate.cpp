#include "probedf/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "probedf/certificates.hpp"

namespace probedf {

namespace {

std::vector<Edge> gnp_edges(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    if (n < 2 || p <= 0.0) return edges;
    long long total = (long long)n * (n - 1) / 2;
    // pair index decoding; indices arrive ascending, so the row pointer only advances
    int u = 0;
    long long row_start = 0;
    auto decode = [&](long long idx) {
        while (idx - row_start >= n - 1 - u) {
            row_start += n - 1 - u;
            ++u;
        }
        return Edge{u, u + 1 + (int)(idx - row_start)};
    };
    if (p >= 1.0) {
        for (long long i = 0; i < total; ++i) edges.push_back(decode(i));
        return edges;
    }
    // geometric skips between successive present pairs
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double logq = std::log1p(-p);
    long long idx = -1;
    while (true) {
        double u = unif(rng);
        idx += 1 + (long long)std::floor(std::log1p(-u) / logq);
        if (idx >= total) break;
        edges.push_back(decode(idx));
    }
    return edges;
}

Graph diamond_free(int n, double p, std::mt19937_64& rng) {
    auto edges = gnp_edges(n, p, rng);
    Graph g(n, edges);
    while (auto dia = find_diamond(g)) {
        const auto& d = *dia;
        // the five edges of the found diamond; drop one at random
        Edge all[5] = {{d[0], d[1]}, {d[0], d[2]}, {d[1], d[2]}, {d[1], d[3]}, {d[2], d[3]}};
        auto [ru, rv] = all[std::uniform_int_distribution<int>(0, 4)(rng)];
        if (ru > rv) std::swap(ru, rv);
        edges = g.edges();
        std::erase(edges, Edge{ru, rv});
        g = Graph(n, edges);
    }
    return g;
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("invalid gnp parameters");
    std::mt19937_64 rng(seed);
    return Graph(n, gnp_edges(n, p, rng));
}

Graph planted_yes(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("invalid parameters");
    std::mt19937_64 rng(seed);
    Graph base = diamond_free(n, p, rng);
    std::vector<char> in_n(n, 0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int v = 0; v < n; ++v) in_n[v] = unif(rng) < 0.3;
    std::vector<Edge> edges;
    for (auto [u, v] : base.edges())
        if (!(in_n[u] && in_n[v])) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph planted_no(int n, double p, std::uint64_t seed, int indicator) {
    if (indicator < 0 || indicator > 17) throw std::invalid_argument("indicator out of range");
    std::mt19937_64 rng(seed);
    if (indicator == 0) indicator = std::uniform_int_distribution<int>(1, 17)(rng);
    const auto& tmpl = obstruction_template(indicator);
    if (n < tmpl.order) throw std::invalid_argument("n too small for the chosen template");

    Graph base = planted_yes(n, p, seed + 0x9e3779b97f4a7c15ull);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> spot(order.begin(), order.begin() + tmpl.order);

    std::vector<char> chosen(n, 0);
    for (int v : spot) chosen[v] = 1;
    std::vector<Edge> edges;
    for (auto [u, v] : base.edges())
        if (!chosen[u] && !chosen[v]) edges.emplace_back(u, v);
    for (auto [i, j] : tmpl.edges) edges.emplace_back(spot[i - 1], spot[j - 1]);
    return Graph(n, edges);
}

}  // namespace probedf
