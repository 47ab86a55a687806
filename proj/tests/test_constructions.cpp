#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/fan.hpp"
#include "fanfree/matching.hpp"
#include "oracles.hpp"

using namespace fanfree;

TEST_CASE("extremal edge-count formula") {
    CHECK(ex_fan(100, 1).value == 2500);
    CHECK(ex_fan(100, 2).value == 2501);
    CHECK(ex_fan(100, 3).value == 2506);
    CHECK(ex_fan(100, 4).value == 2510);
    CHECK(ex_fan(4, 1).value == 4);
    CHECK_FALSE(ex_fan(4, 1).in_proven_range);
    CHECK(ex_fan(50, 1).in_proven_range);
    CHECK_FALSE(ex_fan(199, 2).in_proven_range);
    CHECK(ex_fan(200, 2).in_proven_range);
    CHECK(ex_fan(7, 1).value == 12);  // floor(49/4) + 0
    CHECK(ex_fan(0, 1).value == 0);
    CHECK_THROWS_AS(ex_fan(10, 0), input_error);
    CHECK_THROWS_AS(ex_fan(-1, 1), input_error);
}

TEST_CASE("bounded-matching bounded-degree edge maximum") {
    CHECK(f_chvatal_hanson(1, 1) == 1);
    CHECK(f_chvatal_hanson(2, 2) == 6);
    CHECK(f_chvatal_hanson(3, 3) == 10);
    CHECK(f_chvatal_hanson(2, 1) == 2);
    CHECK(f_chvatal_hanson(3, 2) == 9);
    CHECK(f_chvatal_hanson(0, 5) == 0);
    CHECK(f_chvatal_hanson(5, 0) == 0);
    CHECK_THROWS_AS(f_chvatal_hanson(-1, 2), input_error);

    // the k-fan formula's additive constant is exactly f(k-1,k-1)
    for (long long k = 1; k <= 50; ++k) {
        long long expect = k % 2 == 1 ? k * k - k : k * k - 3 * k / 2;
        CHECK(f_chvatal_hanson(k - 1, k - 1) == expect);
        CHECK(ex_fan(1000, k).value == 1000LL * 1000 / 4 + expect);
    }
}

TEST_CASE("formula is monotone in both arguments") {
    for (long long beta = 0; beta <= 12; ++beta)
        for (long long delta = 0; delta <= 12; ++delta) {
            CHECK(f_chvatal_hanson(beta + 1, delta) >= f_chvatal_hanson(beta, delta));
            CHECK(f_chvatal_hanson(beta, delta + 1) >= f_chvatal_hanson(beta, delta));
        }
}

TEST_CASE("certified witness graphs attain the formula") {
    for (long long beta = 1; beta <= 5; ++beta)
        for (long long delta = 1; delta <= 5; ++delta) {
            Graph g = chvatal_hanson_extremal_graph(beta, delta);
            CHECK(g.edge_count() == f_chvatal_hanson(beta, delta));
            CHECK(max_degree(g) <= static_cast<std::size_t>(delta));
            CHECK(matching_number(g) <= static_cast<std::size_t>(beta));
            CHECK(g.order() <= chvatal_hanson_order_bound(beta, delta));
        }
    CHECK_THROWS_AS(chvatal_hanson_extremal_graph(10, 10, 25), capability_error);
}

TEST_CASE("witness order bound is honest on a small grid") {
    // brute force over all isomorphism classes with the degree cap:
    // no graph on up to order_bound vertices beats the formula
    for (long long beta = 1; beta <= 2; ++beta)
        for (long long delta = 1; delta <= 2; ++delta) {
            std::size_t bound = chvatal_hanson_order_bound(beta, delta);
            long long best = 0;
            auto keep = [&](const Graph& h, vertex, vertex) {
                return max_degree(h) <= static_cast<std::size_t>(delta) &&
                       matching_number(h) <= static_cast<std::size_t>(beta);
            };
            for (const Graph& g : testutil::enumerate_classes(bound, keep))
                best = std::max(best, static_cast<long long>(g.edge_count()));
            CHECK(best == f_chvatal_hanson(beta, delta));
        }
}

TEST_CASE("bipartite Turan graph") {
    Graph t6 = turan_bipartite(6);
    CHECK(t6.edge_count() == 9);
    CHECK(oracle::isomorphic(t6, make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                                {2, 3}, {2, 4}, {2, 5}})));
    for (std::size_t n = 1; n <= 30; ++n) {
        Graph t = turan_bipartite(n);
        CHECK(t.edge_count() == static_cast<long long>(n) * static_cast<long long>(n) / 4);
        CHECK(triangle_count(t) == 0);
    }
}

TEST_CASE("odd-k extremal graph") {
    Graph g = extremal_g1(14, 3);
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 55);
    CHECK(max_degree(g) == 9);
    CHECK_FALSE(contains_fan(g, 3));
    CHECK(is_connected(g));
    CHECK(ex_fan(14, 3).value == 55);

    CHECK(extremal_g1(11, 3).edge_count() == ex_fan(11, 3).value);  // n = 4k-1 boundary
    CHECK_THROWS_AS(extremal_g1(10, 3), input_error);
    CHECK_THROWS_AS(extremal_g1(12, 2), input_error);  // parity
    // k = 1 degenerates to the bipartite Turan graph
    CHECK(extremal_g1(9, 1) == turan_bipartite(9));
}

TEST_CASE("even-k extremal graph") {
    Graph g = extremal_g2(10, 2);
    CHECK(g.edge_count() == 26);
    CHECK_FALSE(contains_fan(g, 2));
    CHECK(extremal_g2(20, 4).edge_count() == 110);
    CHECK_FALSE(contains_fan(extremal_g2(20, 4), 4));
    CHECK(extremal_g2(5, 2).edge_count() == ex_fan(5, 2).value);  // n = 4k-3 boundary
    CHECK_THROWS_AS(extremal_g2(4, 2), input_error);
    CHECK_THROWS_AS(extremal_g2(13, 3), input_error);  // parity
}

TEST_CASE("embedded block for even k") {
    for (std::size_t k : {2, 4, 6, 8, 12}) {
        Graph h = hstar(k);
        CHECK(h.order() == 2 * k - 1);
        CHECK(h.edge_count() == static_cast<long long>(k) * static_cast<long long>(k) -
                                    3 * static_cast<long long>(k) / 2);
        CHECK(max_degree(h) <= k - 1);
        CHECK(matching_number(h) <= k - 1);
        CHECK(h == hstar(k));  // deterministic fixture
    }
    CHECK_THROWS_AS(hstar(3), input_error);
}

TEST_CASE("constructions certified across the acceptance grid") {
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t n : {4 * k, std::size_t{50}, std::size_t{100}}) {
            Graph g = k % 2 == 1 ? extremal_g1(n, k) : extremal_g2(n, k);
            CHECK(g.edge_count() == ex_fan(static_cast<long long>(n),
                                           static_cast<long long>(k)).value);
            CHECK_FALSE(contains_fan(g, k));
        }
}
