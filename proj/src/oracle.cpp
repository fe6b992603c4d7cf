#include "probedf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "probedf/certificates.hpp"

namespace probedf {

namespace {

// Multi-word adjacency rows for mutable diamond-closure scans.
struct Dense {
    int n, words;
    std::vector<std::uint64_t> bits;

    explicit Dense(const Graph& g) : n(g.vertex_count()), words((n + 63) / 64), bits() {
        bits.assign((size_t)n * words, 0);
        for (auto [u, v] : g.edges()) set(u, v);
    }
    std::uint64_t* row(int v) { return bits.data() + (size_t)v * words; }
    const std::uint64_t* row(int v) const { return bits.data() + (size_t)v * words; }
    void set(int u, int v) {
        row(u)[v / 64] |= 1ull << (v % 64);
        row(v)[u / 64] |= 1ull << (u % 64);
    }
    bool adj(int u, int v) const { return row(u)[v / 64] >> (v % 64) & 1; }

    // any induced diamond, as (tip, tip, nontip, nontip)
    std::optional<std::array<int, 4>> find_diamond() const {
        std::vector<std::uint64_t> common(words);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!adj(u, v)) continue;
                for (int w = 0; w < words; ++w) common[w] = row(u)[w] & row(v)[w];
                for (int w = 0; w < words; ++w) {
                    std::uint64_t m = common[w];
                    while (m) {
                        int x = w * 64 + std::countr_zero(m);
                        m &= m - 1;
                        for (int w2 = 0; w2 < words; ++w2) {
                            std::uint64_t miss = common[w2] & ~row(x)[w2];
                            if (w2 == x / 64) miss &= ~(1ull << (x % 64));
                            if (miss) {
                                int y = w2 * 64 + std::countr_zero(miss);
                                return std::array<int, 4>{std::min(x, y), std::max(x, y),
                                                          u, v};
                            }
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, int indicator) {
    const auto& t = obstruction_template(indicator);
    int n = g.vertex_count(), k = t.order;
    if (n < k) return std::nullopt;

    std::vector<std::vector<char>> tadj(k, std::vector<char>(k, 0));
    std::vector<int> tdeg(k, 0);
    for (auto [i, j] : t.edges) {
        tadj[i - 1][j - 1] = tadj[j - 1][i - 1] = 1;
        ++tdeg[i - 1];
        ++tdeg[j - 1];
    }
    std::vector<int> tdeg_sorted = tdeg;
    std::sort(tdeg_sorted.begin(), tdeg_sorted.end());

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> deg(k), perm(k, -1);
    std::vector<char> used(k, 0);

    auto backtrack = [&](auto&& self, int pos) -> bool {
        if (pos == k) return true;
        for (int c = 0; c < k; ++c) {
            if (used[c] || deg[c] != tdeg[pos]) continue;
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p)
                if (g.adjacent(idx[perm[p]], idx[c]) != (bool)tadj[p][pos]) ok = false;
            if (!ok) continue;
            used[c] = 1;
            perm[pos] = c;
            if (self(self, pos + 1)) return true;
            used[c] = 0;
        }
        return false;
    };

    // subset enumeration in lexicographic order
    while (true) {
        std::vector<int> ds(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(idx[i], idx[j])) {
                    ++ds[i];
                    ++ds[j];
                }
        deg = ds;
        std::sort(ds.begin(), ds.end());
        if (ds == tdeg_sorted) {
            std::fill(used.begin(), used.end(), 0);
            if (backtrack(backtrack, 0)) {
                std::vector<int> res(k);
                for (int p = 0; p < k; ++p) res[p] = idx[perm[p]];
                return res;
            }
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

OracleVerdict oracle_forbidden(const Graph& g) {
    for (int ind = 1; ind <= 17; ++ind)
        if (auto hit = find_induced(g, ind)) return {false, ind, std::move(*hit)};
    return {true, 0, {}};
}

std::optional<std::vector<Edge>> completion_closure(const Graph& g,
                                                    const std::vector<int>& nonprobes) {
    Dense d(g);
    std::vector<char> in_n(g.vertex_count(), 0);
    for (int v : nonprobes) in_n[v] = 1;
    std::vector<Edge> f;
    while (auto dia = d.find_diamond()) {
        int x = (*dia)[0], y = (*dia)[1];
        if (!in_n[x] || !in_n[y]) return std::nullopt;
        d.set(x, y);
        f.emplace_back(x, y);
    }
    std::sort(f.begin(), f.end());
    return f;
}

CompletionVerdict oracle_completion(const Graph& g, bool exhaustive_f) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("exhaustive completion search is limited to n <= 20");
    std::vector<std::uint32_t> row(n, 0);
    for (auto [u, v] : g.edges()) {
        row[u] |= 1u << v;
        row[v] |= 1u << u;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (mask >> v & 1 && (row[v] & mask)) independent = false;
        if (!independent) continue;
        std::vector<int> nset;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) nset.push_back(v);

        if (exhaustive_f) {
            std::vector<Edge> nonedges;
            for (size_t i = 0; i < nset.size(); ++i)
                for (size_t j = i + 1; j < nset.size(); ++j)
                    if (!g.adjacent(nset[i], nset[j])) nonedges.emplace_back(nset[i], nset[j]);
            if (nonedges.size() <= 20) {
                for (std::uint32_t fm = 0; fm < (1u << nonedges.size()); ++fm) {
                    std::vector<Edge> f;
                    for (size_t e = 0; e < nonedges.size(); ++e)
                        if (fm >> e & 1) f.push_back(nonedges[e]);
                    if (is_diamond_free(g.with_edges(f))) return {true, nset, f};
                }
                continue;
            }
        }
        if (auto f = completion_closure(g, nset)) return {true, nset, std::move(*f)};
    }
    return {false, {}, {}};
}

std::vector<std::array<int, 4>> enumerate_diamonds(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    int missing_i = -1, missing_j = -1, edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) {
                            if (g.adjacent(quad[i], quad[j]))
                                ++edges;
                            else {
                                missing_i = quad[i];
                                missing_j = quad[j];
                            }
                        }
                    if (edges != 5) continue;
                    std::array<int, 2> nt{};
                    int p = 0;
                    for (int v : quad)
                        if (v != missing_i && v != missing_j) nt[p++] = v;
                    out.push_back({missing_i, nt[0], nt[1], missing_j});
                }
    return out;
}

std::vector<int> diamond_tips(const Graph& g) {
    std::vector<int> tips;
    for (const auto& d : enumerate_diamonds(g)) {
        tips.push_back(d[0]);
        tips.push_back(d[3]);
    }
    std::sort(tips.begin(), tips.end());
    tips.erase(std::unique(tips.begin(), tips.end()), tips.end());
    return tips;
}

std::vector<Edge> cotip_pairs(const Graph& g) {
    std::vector<Edge> pairs;
    for (const auto& d : enumerate_diamonds(g)) pairs.emplace_back(d[0], d[3]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

}  // namespace probedf
