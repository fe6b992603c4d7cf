#include <algorithm>

#include "doctest.h"
#include "probedf/certificates.hpp"
#include "probedf/graph.hpp"
#include "probedf/oracle.hpp"
#include "test_util.hpp"

using namespace probedf;

TEST_CASE("obstruction table shape") {
    const auto& table = obstruction_templates();
    REQUIRE(table.size() == 17);
    for (int i = 0; i < 17; ++i) {
        CHECK(table[i].indicator == i + 1);
        CHECK(table[i].order >= 4);
        CHECK(std::is_sorted(table[i].edges.begin(), table[i].edges.end()));
    }
    CHECK(obstruction_template(1).order == 5);
    CHECK(obstruction_template(6).order == 7);
    CHECK(obstruction_template(17).order == 9);
    CHECK(obstruction_template(7).order == 8);
    CHECK_THROWS(obstruction_template(0));
    CHECK_THROWS(obstruction_template(18));
}

TEST_CASE("templates are pairwise non-isomorphic") {
    for (int i = 1; i <= 17; ++i) {
        Graph gi = template_graph(i);
        for (int j = i + 1; j <= 17; ++j) {
            const auto& tj = obstruction_template(j);
            if (tj.order != gi.vertex_count()) continue;
            CHECK(!find_induced(gi, j).has_value());
        }
    }
}

TEST_CASE("each template certifies itself") {
    for (int i = 1; i <= 17; ++i) {
        Graph g = template_graph(i);
        std::vector<int> identity(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) identity[v] = v;
        CHECK(verify_negative(g, i, identity));

        std::vector<int> reversed(identity.rbegin(), identity.rend());
        bool palindromic = induced_ordered(g, reversed) == obstruction_template(i).edges;
        CHECK(verify_negative(g, i, reversed) == palindromic);

        // Wrong indicator of the same order must be rejected.
        for (int j = 1; j <= 17; ++j)
            if (j != i && obstruction_template(j).order == g.vertex_count())
                CHECK(!verify_negative(g, j, identity));
    }
}

TEST_CASE("negative verifier input validation") {
    Graph g = template_graph(1);
    CHECK(!verify_negative(g, 1, std::vector<int>{0, 1, 2, 3}));      // too short
    CHECK(!verify_negative(g, 1, std::vector<int>{0, 1, 2, 3, 3}));   // repeat
    CHECK(!verify_negative(g, 1, std::vector<int>{0, 1, 2, 3, 9}));   // out of range
    CHECK(!verify_negative(g, 0, std::vector<int>{0, 1, 2, 3, 4}));   // bad indicator
    CHECK(!verify_negative(g, 42, std::vector<int>{0, 1, 2, 3, 4}));  // bad indicator
}

TEST_CASE("positive verifier") {
    Graph diamond = testutil::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<int> probes{1, 2}, nonprobes{0, 3};
    std::vector<Edge> completion{{0, 3}};
    std::vector<Edge> none;
    CHECK(verify_positive(diamond, probes, nonprobes, completion));
    CHECK(!verify_positive(diamond, probes, nonprobes, none));  // diamond survives
    CHECK(!verify_positive(diamond, std::vector<int>{0, 1, 2, 3}, std::vector<int>{}, none));
    CHECK(!verify_positive(diamond, std::vector<int>{1}, nonprobes, completion));  // no partition
    CHECK(!verify_positive(diamond, std::vector<int>{0, 1}, std::vector<int>{2, 3},
                           std::vector<Edge>{{2, 3}}));  // N not independent
    CHECK(!verify_positive(diamond, probes, nonprobes,
                           std::vector<Edge>{{1, 2}}));  // F touches a probe
    CHECK(!verify_positive(diamond, probes, nonprobes,
                           std::vector<Edge>{{0, 3}, {0, 3}}));  // duplicate

    Graph c6 = testutil::make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(verify_positive(c6, std::vector<int>{0, 1, 2, 3, 4, 5}, std::vector<int>{}, none));
    CHECK(verify_positive(c6, std::vector<int>{1, 2, 3, 4, 5}, std::vector<int>{0}, none));
}
