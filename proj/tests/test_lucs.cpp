#include <algorithm>
#include <set>

#include "doctest.h"
#include "probedf/certificates.hpp"
#include "probedf/graph.hpp"
#include "probedf/lucs.hpp"
#include "probedf/oracle.hpp"
#include "test_util.hpp"

using namespace probedf;

namespace {

// Every vertex whose neighborhood fails the complete-split test, by brute force.
bool locally_complete_split(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const auto& comp : neighborhood_components(g, v)) {
            std::vector<Edge> es;
            int c = (int)comp.vertices.size();
            for (int i = 0; i < c; ++i)
                for (int j = i + 1; j < c; ++j)
                    if (g.adjacent(comp.vertices[i], comp.vertices[j])) es.emplace_back(i, j);
            if (!testutil::complete_split_by_definition(Graph(c, es))) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("roles on named graphs") {
    Graph diamond = testutil::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto out = assign_roles(diamond);
    REQUIRE(!out.violation.has_value());
    REQUIRE(!out.roles.conflicted());
    CHECK(out.roles.nonprobes == std::vector<int>{0, 3});
    CHECK(out.roles.completion == std::vector<Edge>{{0, 3}});

    Graph gem = testutil::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    auto bad = assign_roles(gem);
    REQUIRE(bad.violation.has_value());
    CHECK(verify_negative(gem, bad.violation->indicator, bad.violation->vertices));

    // Bowtie: two triangles sharing a vertex. Diamond-free, so no forced roles.
    Graph bowtie = testutil::make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto ok = assign_roles(bowtie);
    REQUIRE(!ok.violation.has_value());
    REQUIRE(!ok.roles.conflicted());
    CHECK(ok.roles.nonprobes.empty());
    CHECK(ok.roles.completion.empty());
}

TEST_CASE("roles match diamond anatomy (exhaustive n <= 6)") {
    for (int n = 4; n <= 6; ++n) {
        testutil::for_each_graph(n, [&](const Graph& g) {
            auto out = assign_roles(g);
            bool lucs = locally_complete_split(g);
            REQUIRE(out.violation.has_value() == !lucs);
            if (out.violation) {
                REQUIRE(out.violation->indicator >= 1);
                REQUIRE(out.violation->indicator <= 3);
                REQUIRE(verify_negative(g, out.violation->indicator, out.violation->vertices));
                return;
            }

            auto diamonds = enumerate_diamonds(g);
            std::set<int> tips, nontips;
            for (const auto& d : diamonds) {
                tips.insert(d[0]);
                tips.insert(d[3]);
                nontips.insert(d[1]);
                nontips.insert(d[2]);
            }
            bool conflict_expected = false;
            for (int t : tips)
                if (nontips.count(t)) conflict_expected = true;

            REQUIRE(out.roles.conflicted() == conflict_expected);
            if (conflict_expected) {
                auto cert = conflict_certificate(g, out.roles);
                REQUIRE((cert.indicator == 4 || cert.indicator == 5));
                REQUIRE(verify_negative(g, cert.indicator, cert.vertices));
                return;
            }

            REQUIRE(out.roles.nonprobes == std::vector<int>(tips.begin(), tips.end()));
            auto forced = cotip_pairs(g);
            REQUIRE(out.roles.completion == forced);
        });
    }
}
