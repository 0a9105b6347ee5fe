#include "doctest.h"

#include "grace/graph.hpp"
#include "grace/oracle.hpp"

using namespace grace;

TEST_SUITE("oracle") {

TEST_CASE("sequence decoding") {
    CHECK(prufer_decode(2, {}).edges == std::vector<Edge>{{1, 2}});
    // (2,2) encodes the star at vertex 2
    CHECK(prufer_decode(4, {2, 2}).edges == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(prufer_decode(4, {2, 3}).edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(prufer_decode(4, {2}), std::invalid_argument);
    CHECK_THROWS_AS(prufer_decode(4, {2, 5}), std::invalid_argument);
}

TEST_CASE("spanning tree counts by subset scan") {
    CHECK(oracle_spanning_tree_count(Graph::complete(4)) == 16);
    CHECK(oracle_spanning_tree_count(Graph::complete(5)) == 125);
    const Graph cycle(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(oracle_spanning_tree_count(cycle) == 6);
    CHECK(oracle_spanning_tree_count(Graph(1, {})) == 1);
    CHECK(oracle_spanning_trees(Graph::complete(4)).size() == 16);
    CHECK_THROWS_AS(oracle_spanning_tree_count(Graph::complete(9)), guard_error);
}

TEST_CASE("graceful trees by subset scan") {
    const auto trees = oracle_graceful_trees(4);
    CHECK(trees.size() == 4);
    for (const auto& t : trees) {
        CHECK(is_tree(4, t));
        CHECK(is_graceful_edge_set(4, t));
    }
    CHECK(oracle_graceful_trees(2).size() == 1);
    CHECK(oracle_graceful_trees(5).size() == 12);
}

TEST_CASE("class counts by sequence scan") {
    const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) CHECK(oracle_tree_codes(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(oracle_tree_codes(10), guard_error);
}

TEST_CASE("bijection scan") {
    const LabeledTree a(4, {{1, 2}, {2, 3}, {3, 4}});
    const LabeledTree b(4, {{1, 3}, {1, 4}, {2, 4}});
    const LabeledTree star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(oracle_isomorphic(a, b));
    CHECK_FALSE(oracle_isomorphic(a, star));
    CHECK_FALSE(oracle_isomorphic(a, LabeledTree(2, {{1, 2}})));
}

TEST_CASE("degree threshold by subset scan") {
    CHECK(oracle_graceful_degree_threshold(Graph::complete(6)) == 2);
    const Graph star(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(oracle_graceful_degree_threshold(star) == 5);
    const Graph cycle(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK_FALSE(oracle_graceful_degree_threshold(cycle).has_value());
}

}  // TEST_SUITE
