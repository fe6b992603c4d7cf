#include <algorithm>

#include "doctest.h"
#include "probedf/certificates.hpp"
#include "probedf/graph.hpp"
#include "probedf/oracle.hpp"
#include "test_util.hpp"

using namespace probedf;

TEST_CASE("forbidden-subgraph oracle on named graphs") {
    Graph gem = testutil::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    auto v = oracle_forbidden(gem);
    REQUIRE(!v.member);
    CHECK(v.indicator == 1);
    CHECK(verify_negative(gem, v.indicator, v.obstruction));

    Graph diamond = testutil::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(oracle_forbidden(diamond).member);

    for (int i = 1; i <= 17; ++i) {
        Graph g = template_graph(i);
        auto verdict = oracle_forbidden(g);
        REQUIRE(!verdict.member);
        CHECK(verdict.indicator <= i);  // scan order: the first hit wins
        CHECK(verify_negative(g, verdict.indicator, verdict.obstruction));
    }
}

TEST_CASE("completion oracle on named graphs") {
    Graph diamond = testutil::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto v = oracle_completion(diamond);
    REQUIRE(v.member);
    CHECK(v.nonprobes == std::vector<int>{0, 3});
    CHECK(v.completion == std::vector<Edge>{{0, 3}});

    Graph gem = testutil::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!oracle_completion(gem).member);

    Graph tiny = testutil::make(2, {{0, 1}});
    auto t = oracle_completion(tiny);
    REQUIRE(t.member);
    CHECK(t.nonprobes.empty());
}

TEST_CASE("closure for a fixed nonprobe set") {
    Graph diamond = testutil::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto f = completion_closure(diamond, {0, 3});
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<Edge>{{0, 3}});
    CHECK(!completion_closure(diamond, {}).has_value());   // tips stuck outside N
    CHECK(!completion_closure(diamond, {0}).has_value());

    Graph c6 = testutil::make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto f6 = completion_closure(c6, {0, 3});
    REQUIRE(f6.has_value());
    CHECK(f6->empty());
}

TEST_CASE("forced closure agrees with exhaustive completion search (exhaustive n = 5)") {
    testutil::for_each_graph(5, [&](const Graph& g) {
        auto fast = oracle_completion(g, false);
        auto slow = oracle_completion(g, true);
        REQUIRE(fast.member == slow.member);
    });
}

TEST_CASE("the two oracles agree (exhaustive n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        testutil::for_each_graph(n, [&](const Graph& g) {
            REQUIRE(oracle_forbidden(g).member == oracle_completion(g).member);
        });
    }
}

TEST_CASE("diamond anatomy helpers") {
    Graph two = testutil::make(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},  // diamond 0..3
                                   {3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 0}});
    auto ds = enumerate_diamonds(two);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0] == std::array<int, 4>{0, 1, 2, 3});
    CHECK(diamond_tips(two) == std::vector<int>{0, 3});
    CHECK(cotip_pairs(two) == std::vector<Edge>{{0, 3}});

    Graph k4 = testutil::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(enumerate_diamonds(k4).empty());
}
