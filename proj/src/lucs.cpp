#include "probedf/lucs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "probedf/complete_split.hpp"

namespace probedf {

RolesOutcome assign_roles(const Graph& g, Instrumentation* stats) {
    int n = g.vertex_count();
    RolesOutcome out;
    RoleState& st = out.roles;
    st.type.assign(n, Role::unset);
    st.wit1.assign(n, -1);
    st.wit2.assign(n, -1);
    st.wit3.assign(n, -1);

    for (int v = 0; v < n; ++v) {
        if (stats) {
            long long cost = g.degree(v);
            for (int u : g.neighbors(v)) cost += g.degree(u);
            stats->neighborhood_scans += cost;
        }
        for (const auto& comp : neighborhood_components(g, v)) {
            auto part = csda(comp.vertices, comp.local_degree);
            if (!part) {
                auto [ind, q] = non_complete_split(g, v, comp);
                out.violation = NegativeCertificate{ind, {q.begin(), q.end()}};
                return out;
            }
            if (part->stable.size() < 2 || st.conflicted()) continue;

            const auto& S = part->stable;
            const auto& K = part->clique;
            assert(!K.empty());
            int k2 = K[0];
            int k3 = K.size() > 1 ? K[1] : v;  // anchor completes the diamond when |K| = 1
            for (int w : S) {
                if (st.type[w] == Role::unset) {
                    st.type[w] = Role::tip;
                    st.wit1[w] = (w == S[0]) ? S[1] : S[0];
                    st.wit2[w] = k2;
                    st.wit3[w] = k3;
                } else if (st.type[w] == Role::notip) {
                    st.vstar = w;
                    st.cwit1 = (w == S[0]) ? S[1] : S[0];
                    st.cwit2 = k2;
                    st.cwit3 = k3;
                    break;
                }
            }
            if (st.conflicted()) continue;
            for (int w : K) {
                if (st.type[w] == Role::unset) {
                    st.type[w] = Role::notip;
                    st.wit1[w] = v;
                    st.wit2[w] = S[0];
                    st.wit3[w] = S[1];
                } else if (st.type[w] == Role::tip) {
                    st.vstar = w;
                    st.cwit1 = v;
                    st.cwit2 = S[0];
                    st.cwit3 = S[1];
                    break;
                }
            }
            if (st.conflicted()) continue;
            for (size_t i = 0; i < S.size(); ++i)
                for (size_t j = i + 1; j < S.size(); ++j)
                    st.completion.emplace_back(S[i], S[j]);
        }
    }

    for (int v = 0; v < n; ++v)
        if (st.type[v] == Role::tip) st.nonprobes.push_back(v);
    std::sort(st.completion.begin(), st.completion.end());
    st.completion.erase(std::unique(st.completion.begin(), st.completion.end()),
                        st.completion.end());
    return out;
}

NegativeCertificate conflict_certificate(const Graph& g, const RoleState& st) {
    assert(st.conflicted());
    int vstar = st.vstar;
    // cotip/nt1/nt2: the diamond where vstar is a tip. other[]: the remaining
    // vertices of the diamond where vstar is a notip.
    int cotip, nt1, nt2;
    std::array<int, 3> other;
    if (st.type[vstar] == Role::tip) {
        cotip = st.wit1[vstar];
        nt1 = st.wit2[vstar];
        nt2 = st.wit3[vstar];
        other = {st.cwit1, st.cwit2, st.cwit3};
    } else {
        cotip = st.cwit1;
        nt1 = st.cwit2;
        nt2 = st.cwit3;
        other = {st.wit1[vstar], st.wit2[vstar], st.wit3[vstar]};
    }
    for (int x : other)
        if (g.adjacent(cotip, x)) return {5, {vstar, nt1, nt2, cotip, x}};
    return {4, {vstar, nt1, nt2, other[0], other[1], other[2], cotip}};
}

std::optional<NegativeCertificate> check_n_independent(const Graph& g, const RoleState& st,
                                                       int* d1_score) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (st.type[u] != Role::tip) continue;
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (st.type[v] == Role::tip) return build_certificate(g, st, u, v, d1_score);
        }
    }
    return std::nullopt;
}

NegativeCertificate build_certificate(const Graph& g, const RoleState& st, int v, int w,
                                      int* d1_score) {
    assert(g.adjacent(v, w) && st.type[v] == Role::tip && st.type[w] == Role::tip);
    int w1v = st.wit1[v], w2v = st.wit2[v], w3v = st.wit3[v];
    int w1w = st.wit1[w], w2w = st.wit2[w], w3w = st.wit3[w];

    if (w1v == w1w) return {6, {w1v, w2v, w3v, w2w, w3w, v, w}};

    const std::array<int, 8> members = {v, w1v, w2v, w3v, w, w1w, w2w, w3w};
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (members[i] == members[j])
                throw std::logic_error("witness diamonds overlap outside the shared-tip case");

    // Cross-adjacency scores; tips contribute 10/7 per cross edge, notips 6/2,
    // depending on whether the far endpoint is a tip.
    auto is_tip = [&](int i) { return i == 0 || i == 1 || i == 4 || i == 5; };
    std::array<int, 8> t{};
    for (int i = 0; i < 8; ++i) {
        int lo = (i < 4) ? 4 : 0;
        for (int j = lo; j < lo + 4; ++j) {
            if (!g.adjacent(members[i], members[j])) continue;
            if (is_tip(i))
                t[i] += is_tip(j) ? 10 : 7;
            else
                t[i] += is_tip(j) ? 6 : 2;
        }
    }
    auto score = [&](int x) {
        for (int i = 0; i < 8; ++i)
            if (members[i] == x) return t[i];
        assert(false);
        return 0;
    };
    int best = 0;
    for (int i = 1; i < 8; ++i)
        if (t[i] > t[best]) best = i;
    int xstar = members[best];

    if (t[best] == 14) return {6, {xstar, w2v, w3v, w2w, w3w, v, w}};
    if (t[best] == 20) {
        int z = (best < 4) ? w : v;
        return {5, {z, st.wit2[z], st.wit3[z], st.wit1[z], xstar}};
    }

    int rho = t[0] + t[1] + t[2] + t[3];
    if (d1_score) *d1_score = rho;
    auto tz = [&](int x) { return score(x) == 0; };
    int i;
    std::vector<int> q;
    switch (rho) {
        case 10:
            i = 1;
            q = {w2v, w3v, v, w, w2w, w3w, w1v, w1w};
            break;
        case 12:
            i = 2;
            if (tz(w2v)) std::swap(w2v, w3v);
            if (tz(w2w)) std::swap(w2w, w3w);
            q = {w2v, w2w, w3v, v, w, w3w, w1v, w1w};
            break;
        case 20:
            i = 3;
            q = {w2v, w3v, v, w1v, w, w1w, w2w, w3w};
            break;
        case 16:
            i = 4;
            if (tz(w2v)) std::swap(w2v, w3v);
            q = {w2v, w3v, v, w1w, w, w2w, w3w, w1v};
            break;
        case 17:
            i = 4;
            if (tz(w2w)) std::swap(w2w, w3w);
            q = {w2w, w3w, w, w1v, v, w2v, w3v, w1w};
            break;
        case 14:
            i = 5;
            // align the notip matching across the two diamonds
            if (!g.adjacent(w2v, w2w)) std::swap(w2w, w3w);
            q = {w2v, w3v, w2w, w3w, v, w, w1v, w1w};
            break;
        case 18:
            i = 6;
            if (score(w2v) > score(w3v)) std::swap(w2v, w3v);
            if (tz(w2w)) std::swap(w2w, w3w);
            q = {w2v, w3v, w2w, v, w1w, w, w3w, w1v};
            break;
        case 19:
            i = 6;
            if (tz(w2v)) std::swap(w2v, w3v);
            if (score(w2w) > score(w3w)) std::swap(w2w, w3w);
            q = {w2w, w3w, w2v, w, w1v, v, w3v, w1w};
            break;
        case 22:
            i = 7;
            if (tz(w2v)) std::swap(w2v, w3v);
            if (tz(w2w)) std::swap(w2w, w3w);
            q = {w2v, w2w, w3v, v, w1v, w, w1w, w3w};
            break;
        case 23:
            i = 8;
            if (tz(w2v)) std::swap(w2v, w3v);
            if (tz(w2w)) std::swap(w2w, w3w);
            q = {w2v, w2w, w1v, w1w, w3v, v, w3w, w};
            break;
        case 24:
            i = 9;
            if (!g.adjacent(w2v, w2w)) std::swap(w2w, w3w);
            q = {w2v, w3v, w2w, w3w, v, w1v, w, w1w};
            break;
        case 25:
            i = 10;
            if (score(w2v) > score(w3v)) std::swap(w2v, w3v);
            if (score(w2w) > score(w3w)) std::swap(w2w, w3w);
            q = {w2v, w3v, w2w, w3w, w1v, v, w1w, w};
            break;
        default:
            throw std::logic_error("unexpected diamond cross-score " + std::to_string(rho));
    }
    return {i + 6, q};
}

}  // namespace probedf
