#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "grace/graph.hpp"
#include "grace/monomial.hpp"
#include "grace/oracle.hpp"

using namespace grace;

namespace {

// column indices of the given edges within g
std::vector<int> columns_of(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<int> cols;
    for (const auto& e : edges) {
        const auto it = std::find(g.edges.begin(), g.edges.end(), make_edge(e.first, e.second));
        REQUIRE(it != g.edges.end());
        cols.push_back(static_cast<int>(it - g.edges.begin()));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::vector<Edge> edges_of(const Graph& g, const ColumnVector& cols) {
    std::vector<Edge> out;
    for (int c : cols) out.push_back(g.edges[c]);
    return out;
}

}  // namespace

TEST_SUITE("monomial") {

TEST_CASE("raw counts are products of row degrees") {
    CHECK(raw_monomial_count(Graph::complete(3)) == 4);
    CHECK(raw_monomial_count(Graph::complete(4)) == 27);
    CHECK(raw_monomial_count(Graph::complete(6)) == 3125);
    // path: row degrees 1, 2, 2
    CHECK(raw_monomial_count(Graph(4, {{1, 2}, {2, 3}, {3, 4}})) == 4);
}

TEST_CASE("enumeration emits each selection with sorted components") {
    std::vector<ColumnVector> got;
    enumerate_monomials(Graph::complete(3), [&](const ColumnVector& v) { got.push_back(v); });
    REQUIRE(got.size() == 4);
    for (const auto& v : got) CHECK(std::is_sorted(v.begin(), v.end()));
    std::sort(got.begin(), got.end());
    // edges of K3 are (1,2) (1,3) (2,3); rows 1 and 2 pick one incident each
    CHECK(got == std::vector<ColumnVector>{{0, 0}, {0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("classification of K3") {
    const auto mc = classify_monomials(Graph::complete(3));
    CHECK(mc.raw_count == 4);
    CHECK(mc.degenerate_count == 1);
    CHECK(mc.spanning_trees.size() == 3);
    CHECK(mc.cyclic_subgraphs.empty());
}

TEST_CASE("classification of K4") {
    const Graph g = Graph::complete(4);
    const auto mc = classify_monomials(g);
    CHECK(mc.raw_count == 27);
    CHECK(mc.degenerate_count == 9);
    CHECK(mc.spanning_trees.size() == 16);
    // the one repeated column set is the triangle on the surviving rows
    REQUIRE(mc.cyclic_subgraphs.size() == 1);
    CHECK(mc.cyclic_subgraphs[0].first == columns_of(g, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(mc.cyclic_subgraphs[0].second == 2);
}

TEST_CASE("classification of K6") {
    const auto mc = classify_monomials(Graph::complete(6));
    CHECK(mc.raw_count == 3125);
    CHECK(mc.spanning_trees.size() == 1296);
    CHECK(mc.cyclic_subgraphs.size() == 327);
    CHECK(mc.degenerate_count == 1175);
    // every raw selection is accounted for
    std::uint64_t total = mc.degenerate_count + mc.spanning_trees.size();
    for (const auto& [cols, mult] : mc.cyclic_subgraphs) {
        total += mult;
        CHECK(mult == 2);  // five edges cannot close two cycles
    }
    CHECK(total == mc.raw_count);
}

TEST_CASE("unique column sets are spanning trees") {
    const Graph g = Graph::complete(5);
    const auto mc = classify_monomials(g);
    CHECK(mc.spanning_trees.size() == 125);
    for (const auto& cols : mc.spanning_trees) CHECK(is_tree(5, edges_of(g, cols)));
    for (const auto& [cols, mult] : mc.cyclic_subgraphs) {
        CHECK_FALSE(is_tree(5, edges_of(g, cols)));
        CHECK(mult >= 2);
    }
}

TEST_CASE("worker count never changes the classification") {
    MonomialOptions serial, parallel;
    parallel.jobs = 4;
    const Graph g = Graph::complete(6);
    const auto a = classify_monomials(g, serial);
    const auto b = classify_monomials(g, parallel);
    CHECK(a.raw_count == b.raw_count);
    CHECK(a.degenerate_count == b.degenerate_count);
    CHECK(a.spanning_trees == b.spanning_trees);
    CHECK(a.cyclic_subgraphs == b.cyclic_subgraphs);
}

TEST_CASE("host graph counts match the subset oracle") {
    srand(20260816);
    for (int trial = 0; trial < 8; ++trial) {
        std::set<Edge> picked;
        while (picked.size() < 9) {
            const int i = rand() % 6 + 1, j = rand() % 6 + 1;
            if (i != j) picked.insert(make_edge(i, j));
        }
        const Graph g(6, {picked.begin(), picked.end()});
        const auto mc = classify_monomials(g);
        CHECK(mc.spanning_trees.size() == oracle_spanning_tree_count(g));
    }
}

TEST_CASE("column set diagnosis") {
    const Graph k4 = Graph::complete(4);
    // a tree: unique monomial, nonsingular, odd determinant
    const auto tree = diagnose_column_set(k4, columns_of(k4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(tree.monomial_count == 1);
    CHECK_FALSE(tree.singular);
    CHECK(tree.det_integer % 2 != 0);
    // the triangle on surviving rows: two monomials, parity-singular, det +-2
    const auto tri = diagnose_column_set(k4, columns_of(k4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(tri.monomial_count == 2);
    CHECK(tri.singular);
    CHECK(std::abs(tri.det_integer) == 2);
    // a triangle through the deleted vertex: no monomial at all, det 0
    const auto dead = diagnose_column_set(k4, columns_of(k4, {{1, 2}, {1, 4}, {2, 4}}));
    CHECK(dead.monomial_count == 0);
    CHECK(dead.singular);
    CHECK(dead.det_integer == 0);
    // odd cycle away from the deleted vertex keeps integer det +-2 on K5
    const Graph k5 = Graph::complete(5);
    const auto odd = diagnose_column_set(k5, columns_of(k5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}}));
    CHECK(odd.monomial_count == 2);
    CHECK(odd.singular);
    CHECK(std::abs(odd.det_integer) == 2);
}

TEST_CASE("size guards") {
    MonomialOptions tight;
    tight.max_raw = 10;
    CHECK_THROWS_AS(classify_monomials(Graph::complete(6), tight), guard_error);
    MonomialOptions narrow;
    narrow.max_rows = 4;
    CHECK_THROWS_AS(classify_monomials(Graph::complete(6), narrow), guard_error);
}

}  // TEST_SUITE
