#include "probedf/recognize.hpp"

#include <numeric>

#include "probedf/aux_bipartite.hpp"
#include "probedf/lucs.hpp"

namespace probedf {

namespace {

Certificate negative(NegativeCertificate neg) {
    Certificate c;
    c.member = false;
    c.indicator = neg.indicator;
    c.vertices = std::move(neg.vertices);
    return c;
}

Certificate positive(const Graph& g, std::vector<int> nonprobes, std::vector<Edge> completion) {
    Certificate c;
    c.member = true;
    c.nonprobes = std::move(nonprobes);
    c.completion = std::move(completion);
    std::vector<char> in_n(g.vertex_count(), 0);
    for (int v : c.nonprobes) in_n[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_n[v]) c.probes.push_back(v);
    return c;
}

}  // namespace

Certificate recognize(const Graph& g, Instrumentation* stats) {
    if (g.vertex_count() <= 3) return positive(g, {}, {});  // too small for a diamond

    auto out = assign_roles(g, stats);
    if (out.violation) return negative(*out.violation);
    if (out.roles.conflicted()) return negative(conflict_certificate(g, out.roles));

    int d1 = -1;
    if (auto neg = check_n_independent(g, out.roles, &d1)) {
        auto c = negative(*neg);
        c.d1_score = d1;
        return c;
    }

    auto aux = build_aux(g, stats);
    if (auto h4 = detect_h4(g, out.roles.nonprobes, aux, stats))
        return negative({5, {h4->begin(), h4->end()}});

    if (auto cyc = find_six_cycle(aux, g.vertex_count(), stats)) {
        const auto& c = *cyc;
        auto [x1, y1] = aux.rep[c[1]];
        auto [x2, y2] = aux.rep[c[5]];
        auto [x3, y3] = aux.rep[c[3]];
        return negative({17, {c[0], c[2], c[4], x1, y1, x2, y2, x3, y3}});
    }

    return positive(g, out.roles.nonprobes, out.roles.completion);
}

}  // namespace probedf
