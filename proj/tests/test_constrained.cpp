#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "grace/canonical.hpp"
#include "grace/constrained.hpp"
#include "grace/oracle.hpp"

using namespace grace;

namespace {

// 6-vertex host with every difference present but thin high rows
const Graph& layered_host() {
    static const Graph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 4}, {3, 5},
                             {4, 6}, {3, 6}, {2, 6}, {1, 6}});
    return g;
}

Graph star_host() { return Graph(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}); }

Graph cycle_host() { return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}); }

int max_degree_of(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n + 1, 0);
    for (auto [i, j] : edges) {
        ++deg[i];
        ++deg[j];
    }
    return *std::max_element(deg.begin(), deg.end());
}

std::uint64_t count_capped(const Graph& host, int cap) {
    ConstrainedOptions opts;
    opts.max_degree = cap;
    return enumerate_constrained_graceful_trees(host, opts, [](const LatticePath&) {});
}

}  // namespace

TEST_SUITE("constrained") {

TEST_CASE("modified lattice keeps only host edges") {
    const ModifiedDeltaLattice lat = build_modified_lattice(layered_host());
    CHECK(lat.n == 6);
    REQUIRE(lat.rows.size() == 6);
    CHECK(lat.rows[1].size() == 5);
    CHECK(lat.rows[2].size() == 4);
    CHECK(lat.rows[3] == std::vector<Edge>{{3, 6}});
    CHECK(lat.rows[4] == std::vector<Edge>{{2, 6}});
    CHECK(lat.rows[5] == std::vector<Edge>{{1, 6}});

    const ModifiedDeltaLattice cyc = build_modified_lattice(cycle_host());
    CHECK(cyc.rows[1].size() == 5);
    CHECK(cyc.rows[2].empty());
    CHECK(cyc.rows[5] == std::vector<Edge>{{1, 6}});
}

TEST_CASE("first hit in the complete host") {
    ConstrainedOptions opts;
    opts.max_degree = 2;
    LatticePath out;
    SearchStats stats;
    CHECK(find_constrained_graceful_tree(Graph::complete(6), opts, out, &stats) ==
          SearchOutcome::Found);
    // leftmost degree-2 descent: the zigzag path labeling
    CHECK(out == path_tree_path(6));
    CHECK(stats.nodes > 0);

    const LabeledTree t = path_tree(out);
    CHECK(is_graceful_tree(t));
    CHECK(max_degree_of(6, t.edges) == 2);
}

TEST_CASE("outcome classification per host") {
    ConstrainedOptions degree2;
    degree2.max_degree = 2;
    LatticePath out;

    // the star host has no degree-2 spanning tree, but all rows are populated
    CHECK(find_constrained_graceful_tree(star_host(), degree2, out) == SearchOutcome::Exhausted);
    ConstrainedOptions degree5;
    degree5.max_degree = 5;
    CHECK(find_constrained_graceful_tree(star_host(), degree5, out) == SearchOutcome::Found);
    CHECK(path_tree(out).edges == star_host().edges);

    // the cycle host misses differences 2..4 outright
    CHECK(find_constrained_graceful_tree(cycle_host(), degree2, out) ==
          SearchOutcome::InfeasibleEmptyRow);

    ConstrainedOptions open;
    CHECK(find_constrained_graceful_tree(Graph(2, {{1, 2}}), open, out) == SearchOutcome::Found);
    CHECK_THROWS_AS(find_constrained_graceful_tree(Graph(1, {}), open, out),
                    std::invalid_argument);
}

TEST_CASE("enumeration counts rise with the cap") {
    const Graph k6 = Graph::complete(6);
    CHECK(count_capped(k6, 1) == 0);
    CHECK(count_capped(k6, 2) == 12);
    CHECK(count_capped(k6, 3) == 32);
    CHECK(count_capped(k6, 4) == 38);
    CHECK(count_capped(k6, 5) == 40);
    CHECK(count_capped(k6, 0) == 40);  // cap 0 lifts the constraint

    // every cap-3 hit is a graceful spanning tree obeying the cap, no repeats
    ConstrainedOptions opts;
    opts.max_degree = 3;
    std::set<std::vector<Edge>> seen;
    enumerate_constrained_graceful_trees(k6, opts, [&](const LatticePath& p) {
        const LabeledTree t = path_tree(p);
        CHECK(is_graceful_tree(t));
        CHECK(max_degree_of(6, t.edges) <= 3);
        seen.insert(p.points);
    });
    CHECK(seen.size() == 32);
}

TEST_CASE("enumeration agrees with the labeling scan") {
    const std::set<Edge> host_edges(layered_host().edges.begin(), layered_host().edges.end());
    for (int cap : {0, 2, 3, 5}) {
        std::uint64_t expect = 0;
        for (const auto& edges : oracle_graceful_trees(6)) {
            bool inside = true;
            for (const Edge& e : edges)
                if (!host_edges.count(e)) inside = false;
            if (inside && (cap == 0 || max_degree_of(6, edges) <= cap)) ++expect;
        }
        CHECK(count_capped(layered_host(), cap) == expect);
    }
    CHECK(count_capped(layered_host(), 0) == 6);
    CHECK(count_capped(layered_host(), 2) == 0);
    CHECK(count_capped(layered_host(), 3) == 3);
}

TEST_CASE("found verdicts match the degree threshold oracle") {
    const Graph hosts[] = {Graph::complete(6), star_host(), layered_host()};
    for (const Graph& host : hosts) {
        const auto threshold = oracle_graceful_degree_threshold(host);
        REQUIRE(threshold.has_value());
        for (int cap = 1; cap <= 5; ++cap) {
            LatticePath out;
            ConstrainedOptions opts;
            opts.max_degree = cap;
            const SearchOutcome res = find_constrained_graceful_tree(host, opts, out);
            CHECK(res != SearchOutcome::InfeasibleEmptyRow);
            CHECK((res == SearchOutcome::Found) == (cap >= *threshold));
        }
    }
    CHECK(!oracle_graceful_degree_threshold(cycle_host()).has_value());
    CHECK(*oracle_graceful_degree_threshold(layered_host()) == 3);
}

TEST_CASE("plain spanning fallback ignores the labeling") {
    ConstrainedOptions degree2;
    degree2.max_degree = 2;
    std::vector<Edge> tree;

    // the cycle has no graceful pick but an easy degree-2 spanning tree
    const Graph cyc = cycle_host();
    CHECK(find_constrained_spanning_tree(cyc, degree2, tree) == SearchOutcome::Found);
    CHECK(is_tree(6, tree));
    CHECK(max_degree_of(6, tree) <= 2);
    const std::set<Edge> host_edges(cyc.edges.begin(), cyc.edges.end());
    for (const Edge& e : tree) CHECK(host_edges.count(e) == 1);

    CHECK(find_constrained_spanning_tree(star_host(), degree2, tree) == SearchOutcome::Exhausted);
    CHECK(find_constrained_spanning_tree(Graph::complete(6), degree2, tree) ==
          SearchOutcome::Found);
}

TEST_CASE("node budget guard") {
    ConstrainedOptions tight;
    tight.max_degree = 2;
    tight.max_nodes = 1;
    LatticePath out;
    CHECK_THROWS_AS(find_constrained_graceful_tree(Graph::complete(6), tight, out), guard_error);
}

}  // TEST_SUITE
