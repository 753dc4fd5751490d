#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/hypergraph.hpp"

using namespace helly;

namespace {

Hypergraph triangle() { return make_hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("make_hypergraph validates and normalizes") {
    auto h = make_hypergraph(4, 2, {{1, 0}, {0, 1}, {2, 3}});
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(make_hypergraph(3, 2, {{0, 0}}), MalformedInputError);
    CHECK_THROWS_AS(make_hypergraph(3, 2, {{0, 3}}), MalformedInputError);
    CHECK_THROWS_AS(make_hypergraph(3, 2, {{0}}), MalformedInputError);
}

TEST_CASE("greedy matching on a triangle picks one edge") {
    CHECK(greedy_maximal_matching(triangle()).edges.size() == 1);
}

TEST_CASE("greedy matching on an edgeless hypergraph is empty") {
    CHECK(greedy_maximal_matching(make_hypergraph(5, 2, {})).edges.empty());
}

TEST_CASE("greedy matching takes both disjoint triples") {
    auto h = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK(greedy_maximal_matching(h).edges.size() == 2);
}

TEST_CASE("greedy matching is deterministic and order-sensitive") {
    auto h = make_hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    auto def = greedy_maximal_matching(h);
    CHECK(def.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    auto alt = greedy_maximal_matching(h, {1, 0, 2});
    CHECK(alt.edges == std::vector<std::vector<int>>{{1, 2}});
    CHECK_THROWS_AS(greedy_maximal_matching(h, {0, 1}), MalformedInputError);
}

TEST_CASE("exact matching and independence numbers on small cases") {
    CHECK(matching_number_exact(triangle()) == 1);
    CHECK(independence_number_exact(triangle()) == 1);

    auto edgeless = make_hypergraph(7, 2, {});
    CHECK(matching_number_exact(edgeless) == 0);
    CHECK(independence_number_exact(edgeless) == 7);
}

TEST_CASE("exact numbers on the complete 3-uniform hypergraph on 7 vertices") {
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) edges.push_back({a, b, c});
    auto h = make_hypergraph(7, 3, edges);
    CHECK(matching_number_exact(h) == 2);
    CHECK(independence_number_exact(h) == 2);
}

TEST_CASE("scale limits are explicit") {
    CHECK_THROWS_AS(independence_number_exact(make_hypergraph(17, 2, {})), ScaleLimitError);
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < 13; ++a)
        for (int b = a + 1; b < 13; ++b) edges.push_back({a, b});
    CHECK_THROWS_AS(matching_number_exact(make_hypergraph(13, 2, edges)), ScaleLimitError);
}

TEST_CASE("uncovered_vertices") {
    auto h = triangle();
    CHECK(uncovered_vertices(h, Matching{{{0, 1}}}) == std::vector<int>{2});
    CHECK(is_independent_set(h, {2}));

    auto edgeless = make_hypergraph(4, 2, {});
    CHECK(uncovered_vertices(edgeless, Matching{}) == std::vector<int>{0, 1, 2, 3});

    auto two = make_hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}});
    // Non-maximal matching: the uncovered set need not be independent.
    auto uncovered = uncovered_vertices(two, Matching{{{0, 1, 2}}});
    CHECK(uncovered == std::vector<int>{3, 4, 5});
    CHECK(!is_independent_set(two, uncovered));
    CHECK(uncovered_vertices(two, Matching{{{0, 1, 2}, {3, 4, 5}}}).empty());

    CHECK_THROWS_AS(uncovered_vertices(two, Matching{{{0, 1, 3}}}), MalformedInputError);
    CHECK_THROWS_AS(uncovered_vertices(two, Matching{{{0, 1, 2}, {0, 1, 2}}}),
                    MalformedInputError);
}

TEST_CASE("properties: maximal matchings on random hypergraphs") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = 2 + trial % 2;
        const int n = r + 1 + static_cast<int>(rng() % 10);  // n <= 12
        auto h = gen_random_hypergraph(n, r, 0.3, 1000 + trial);

        std::vector<int> order(h.edges.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);

        for (const auto& edge_order : {std::vector<int>{}, order}) {
            auto m = greedy_maximal_matching(h, edge_order);
            auto uncovered = uncovered_vertices(h, m);
            CAPTURE(trial);
            CHECK(is_independent_set(h, uncovered));

            // Uncovered-count inequality with alpha from brute force.
            const int alpha = independence_number_exact(h);
            CHECK(n - r * static_cast<int>(m.edges.size()) <= alpha);
            if (h.edges.size() <= 64) {
                CHECK(static_cast<int>(m.edges.size()) <= matching_number_exact(h));
            }
        }
    }
}
