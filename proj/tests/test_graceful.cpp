#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "grace/graceful.hpp"
#include "grace/graph.hpp"
#include "grace/oracle.hpp"

using namespace grace;

namespace {

EdgeSet sorted_set(std::vector<Edge> edges) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_SUITE("graceful") {

TEST_CASE("per-difference generator emits (n-1)! graceful sets") {
    for (int n = 2; n <= 7; ++n) {
        std::uint64_t count = 0, expect = 1;
        for (int k = 2; k < n; ++k) expect *= k;
        std::set<EdgeSet> seen;
        enumerate_graceful_subgraphs(n, [&](const EdgeSet& es) {
            ++count;
            CHECK(is_graceful_edge_set(n, es));
            CHECK(std::is_sorted(es.begin(), es.end()));
            seen.insert(es);
        });
        CHECK(count == expect);
        CHECK(seen.size() == count);  // selections never repeat an edge set
    }
}

TEST_CASE("catalog values, frozen") {
    // trees verified against the edge subset oracle up to n=8
    const std::uint64_t trees[] = {1, 2, 4, 12, 40, 164, 752, 4020};
    const std::uint64_t raw[] = {1, 2, 4, 12, 40, 168, 784, 4272};
    const std::uint64_t vectors[] = {1, 1, 2, 4, 12, 36, 144, 576};
    const std::uint64_t bound_theorem[] = {1, 1, 4, 8, 48, 144, 1152, 4608};
    const std::uint64_t bound_remark[] = {1, 1, 4, 4, 48, 48, 1152, 1152};
    for (int n = 2; n <= 9; ++n) {
        const auto cat = build_graceful_catalog(n);
        CAPTURE(n);
        CHECK(cat.trees.size() == trees[n - 2]);
        CHECK(cat.raw_selections == raw[n - 2]);
        CHECK(cat.choice_vectors == vectors[n - 2]);
        CHECK(cat.bound_theorem == bound_theorem[n - 2]);
        CHECK(cat.bound_remark == bound_remark[n - 2]);
        std::uint64_t factorial = 1;
        for (int k = 2; k < n; ++k) factorial *= k;
        CHECK(cat.factorial_count == factorial);
        CHECK(cat.trees.size() + cat.non_trees.size() == factorial);
        CHECK(cat.nontree_selections == cat.raw_selections - cat.trees.size());
    }
}

TEST_CASE("bound forms coincide exactly at even n") {
    for (int n = 2; n <= 10; ++n) {
        const auto b = graceful_tree_bound(n);
        CAPTURE(n);
        if (n % 2 == 0)
            CHECK(b.theorem_product == b.remark_closed_form);
        else if (n > 3)
            CHECK(b.theorem_product > b.remark_closed_form);
    }
}

TEST_CASE("catalog trees agree with the subset oracle") {
    for (int n = 2; n <= 6; ++n) {
        const auto cat = build_graceful_catalog(n);
        const auto expect = oracle_graceful_trees(n);
        std::set<EdgeSet> a(cat.trees.begin(), cat.trees.end());
        std::set<EdgeSet> b(expect.begin(), expect.end());
        CHECK(a == b);
    }
}

TEST_CASE("every tree uses the forced pairs") {
    // the top difference has one pair; the next has two candidates
    for (int n : {5, 6, 7}) {
        const auto cat = build_graceful_catalog(n);
        for (const auto& t : cat.trees) {
            CHECK(std::count(t.begin(), t.end(), make_edge(1, n)) == 1);
            const bool second = std::count(t.begin(), t.end(), make_edge(1, n - 1)) +
                                    std::count(t.begin(), t.end(), make_edge(2, n)) >
                                0;
            CHECK(second);
        }
    }
}

TEST_CASE("K6 row-selection table, frozen by hand") {
    // row r of each vector picks the pair charged to vertex r
    const int table[39][5][2] = {
        {{1, 6}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, {{1, 6}, {2, 1}, {3, 5}, {4, 1}, {5, 1}},
        {{1, 6}, {2, 3}, {3, 1}, {4, 1}, {5, 1}}, {{1, 6}, {2, 3}, {3, 5}, {4, 1}, {5, 1}},
        {{1, 6}, {2, 1}, {3, 6}, {4, 2}, {5, 1}}, {{1, 6}, {2, 1}, {3, 6}, {4, 6}, {5, 1}},
        {{1, 6}, {2, 3}, {3, 6}, {4, 2}, {5, 1}}, {{1, 6}, {2, 3}, {3, 6}, {4, 6}, {5, 1}},
        {{1, 6}, {2, 4}, {3, 2}, {4, 1}, {5, 1}}, {{1, 6}, {2, 4}, {3, 4}, {4, 1}, {5, 1}},
        {{1, 6}, {2, 4}, {3, 6}, {4, 3}, {5, 1}}, {{1, 6}, {2, 4}, {3, 6}, {4, 5}, {5, 1}},
        {{1, 6}, {2, 5}, {3, 2}, {4, 2}, {5, 1}}, {{1, 6}, {2, 5}, {3, 2}, {4, 6}, {5, 1}},
        {{1, 6}, {2, 5}, {3, 4}, {4, 2}, {5, 1}}, {{1, 6}, {2, 5}, {3, 4}, {4, 6}, {5, 1}},
        {{1, 6}, {2, 5}, {3, 1}, {4, 3}, {5, 1}}, {{1, 6}, {2, 5}, {3, 1}, {4, 5}, {5, 1}},
        {{1, 6}, {2, 5}, {3, 5}, {4, 3}, {5, 1}}, {{1, 6}, {2, 5}, {3, 5}, {4, 5}, {5, 1}},
        {{1, 6}, {2, 6}, {3, 2}, {4, 2}, {5, 2}}, {{1, 6}, {2, 6}, {3, 2}, {4, 6}, {5, 2}},
        {{1, 6}, {2, 6}, {3, 4}, {4, 2}, {5, 2}}, {{1, 6}, {2, 6}, {3, 4}, {4, 6}, {5, 2}},
        {{1, 6}, {2, 6}, {3, 2}, {4, 1}, {5, 3}}, {{1, 6}, {2, 6}, {3, 4}, {4, 1}, {5, 3}},
        {{1, 6}, {2, 6}, {3, 1}, {4, 3}, {5, 2}}, {{1, 6}, {2, 6}, {3, 1}, {4, 5}, {5, 2}},
        {{1, 6}, {2, 6}, {3, 5}, {4, 3}, {5, 2}}, {{1, 6}, {2, 6}, {3, 5}, {4, 5}, {5, 2}},
        {{1, 6}, {2, 6}, {3, 1}, {4, 1}, {5, 4}}, {{1, 6}, {2, 6}, {3, 1}, {4, 1}, {5, 6}},
        {{1, 6}, {2, 6}, {3, 5}, {4, 1}, {5, 4}}, {{1, 6}, {2, 6}, {3, 5}, {4, 1}, {5, 6}},
        {{1, 6}, {2, 6}, {3, 6}, {4, 2}, {5, 4}}, {{1, 6}, {2, 6}, {3, 6}, {4, 2}, {5, 6}},
        {{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 4}}, {{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}},
        {{1, 6}, {2, 6}, {3, 6}, {4, 3}, {5, 3}},
    };
    const auto cat = build_graceful_catalog(6);
    std::set<EdgeSet> members(cat.trees.begin(), cat.trees.end());
    REQUIRE(members.size() == 40);

    std::set<EdgeSet> listed;
    for (const auto& row : table) {
        EdgeSet es;
        for (const auto& pair : row) es.push_back(make_edge(pair[0], pair[1]));
        es = sorted_set(es);
        CHECK(members.count(es));
        listed.insert(es);
    }
    CHECK(listed.size() == 39);
    // the one member the table omits: the second completion of its last block
    const EdgeSet last = sorted_set({{1, 6}, {2, 6}, {3, 6}, {4, 5}, {3, 5}});
    CHECK(members.count(last));
    listed.insert(last);
    CHECK(std::set<EdgeSet>(listed) == members);
}

TEST_CASE("catalogs are closed under complement relabeling") {
    for (int n = 2; n <= 7; ++n) {
        const auto cat = build_graceful_catalog(n);
        std::set<EdgeSet> members(cat.trees.begin(), cat.trees.end());
        for (const auto& t : cat.trees) CHECK(members.count(sorted_set(complement_relabel(n, t))));
    }
}

TEST_CASE("class coverage of the K6 catalog, frozen") {
    const auto cat = build_graceful_catalog(6);
    const auto classes = coverage_by_isomorphism(cat);
    REQUIRE(classes.size() == 6);
    std::uint32_t total = 0;
    std::vector<std::uint32_t> counts;
    for (const auto& [code, count] : classes) {
        total += count;
        counts.push_back(count);
    }
    CHECK(total == 40);
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<std::uint32_t>{2, 6, 6, 6, 8, 12});
    // the star admits exactly two labelings: hub first or hub last
    CHECK(classes.at("(()()()()())") == 2);
    // the path admits the most
    CHECK(classes.at("(((()))(()))") == 12);
}

TEST_CASE("worker count never changes the catalog") {
    GracefulOptions serial, parallel;
    parallel.jobs = 4;
    const auto a = build_graceful_catalog(7, serial);
    const auto b = build_graceful_catalog(7, parallel);
    CHECK(a.raw_selections == b.raw_selections);
    CHECK(a.choice_vectors == b.choice_vectors);
    CHECK(a.trees == b.trees);
    CHECK(a.non_trees == b.non_trees);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(build_graceful_catalog(11), guard_error);
    GracefulOptions opts;
    opts.streaming = true;
    std::uint64_t count = 0;
    CHECK_NOTHROW(enumerate_graceful_subgraphs(
        11, [&](const EdgeSet&) { ++count; }, opts));
    CHECK(count == 3628800);
}

}  // TEST_SUITE
