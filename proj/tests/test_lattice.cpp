#include "doctest.h"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "grace/canonical.hpp"
#include "grace/lattice.hpp"
#include "grace/oracle.hpp"

using namespace grace;

namespace {

LatticePath path6(std::vector<Edge> points) { return make_lattice_path(6, std::move(points)); }

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("lattice rows hold the pairs of each difference") {
    const DeltaLattice lat = build_delta_lattice(6);
    CHECK(lat.n == 6);
    REQUIRE(lat.rows.size() == 6);
    CHECK(lat.rows[0].empty());
    CHECK(lat.rows[5] == std::vector<Edge>{{1, 6}});
    CHECK(lat.rows[3] == std::vector<Edge>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(lat.rows[1].size() == 5);
}

TEST_CASE("path construction sorts and validates") {
    // apex first regardless of input order
    const LatticePath p = path6({{2, 3}, {1, 6}, {2, 4}, {1, 5}, {2, 5}});
    CHECK(p.points == std::vector<Edge>{{1, 6}, {1, 5}, {2, 5}, {2, 4}, {2, 3}});

    CHECK_THROWS_AS(path6({{1, 6}, {1, 5}, {2, 5}, {2, 4}}), std::invalid_argument);
    // difference 4 appears twice, difference 2 never
    CHECK_THROWS_AS(path6({{1, 6}, {1, 5}, {2, 6}, {2, 3}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(path6({{1, 6}, {1, 5}, {2, 5}, {2, 4}, {6, 7}}), std::invalid_argument);
}

TEST_CASE("named descents decode to the expected shapes") {
    CHECK(star_path(6).points ==
          std::vector<Edge>{{1, 6}, {1, 5}, {1, 4}, {1, 3}, {1, 2}});
    CHECK(path_tree_path(6).points ==
          std::vector<Edge>{{1, 6}, {1, 5}, {2, 5}, {2, 4}, {3, 4}});

    const LabeledTree star_tree = path_tree(star_path(6));
    CHECK(star_tree.edges == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(is_graceful_tree(star_tree));

    const LabeledTree zigzag = path_tree(path_tree_path(6));
    CHECK(is_graceful_tree(zigzag));
    CHECK(canonical_code(zigzag) ==
          canonical_code(LabeledTree(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})));

    // brooms interpolate between the path and the star
    CHECK(broom_path(6, 5) == star_path(6));
    CHECK(broom_path(6, 1) == mirror_path(path_tree_path(6)));
    CHECK(broom_path(6, 3).points ==
          std::vector<Edge>{{1, 6}, {1, 5}, {1, 4}, {2, 4}, {2, 3}});
    for (int pendants = 1; pendants <= 5; ++pendants)
        CHECK(path_is_tree(broom_path(6, pendants)));
}

TEST_CASE("sample descents are all trees") {
    const std::vector<LatticePath> samples = {
        path6({{1, 6}, {1, 5}, {1, 4}, {1, 3}, {1, 2}}),
        path6({{1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 3}}),
        path6({{1, 6}, {1, 5}, {1, 4}, {2, 4}, {2, 3}}),
        path6({{1, 6}, {1, 5}, {2, 5}, {2, 4}, {2, 3}}),
        path6({{1, 6}, {1, 5}, {1, 4}, {2, 4}, {3, 4}}),
        path6({{1, 6}, {1, 5}, {2, 5}, {2, 4}, {3, 4}}),
        path6({{1, 6}, {1, 5}, {2, 5}, {1, 3}, {3, 4}}),
    };
    for (const LatticePath& p : samples) {
        CHECK(path_is_tree(p));
        CHECK(is_graceful_tree(path_tree(p)));
    }

    // two distinct paths can land on the same shape without being mirrors
    CHECK(canonical_code(path_tree(samples[2])) == canonical_code(path_tree(samples[3])));
    CHECK(!(mirror_path(samples[2]) == samples[3]));
    CHECK(mirror_path(samples[2]).points ==
          std::vector<Edge>{{1, 6}, {2, 6}, {3, 6}, {3, 5}, {4, 5}});
}

TEST_CASE("mirror reflects pairs and decodes to the complement") {
    const LatticePath p = path_tree_path(6);
    CHECK(mirror_path(mirror_path(p)) == p);
    CHECK(mirror_path(star_path(6)).points ==
          std::vector<Edge>{{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});

    std::uint64_t mismatches = 0;
    enumerate_lattice_paths(6, true, [&](const LatticePath& q) {
        if (path_tree(mirror_path(q)).edges != complement_relabel(path_tree(q)).edges)
            ++mismatches;
    });
    CHECK(mismatches == 0);
}

TEST_CASE("cyclic descents are rejected by the tree decoder") {
    const LatticePath cyc = make_lattice_path(4, {{1, 4}, {2, 4}, {1, 2}});
    CHECK(!path_is_tree(cyc));
    CHECK_THROWS_AS(path_tree(cyc), std::invalid_argument);
}

TEST_CASE("path counts") {
    CHECK(count_lattice_paths(2, false) == 1);
    CHECK(count_lattice_paths(2, true) == 1);
    CHECK(count_lattice_paths(5, true) == 12);
    CHECK(count_lattice_paths(6, false) == 120);
    CHECK(count_lattice_paths(6, true) == 40);
    CHECK(count_lattice_paths(7, true) == 164);

    LatticeOptions par;
    par.jobs = 4;
    CHECK(count_lattice_paths(7, true, par) == 164);
    CHECK(count_lattice_paths(7, false, par) == 720);
}

TEST_CASE("enumeration matches the count and stays distinct") {
    std::set<std::vector<Edge>> seen;
    enumerate_lattice_paths(6, true, [&](const LatticePath& p) {
        CHECK(p.n == 6);
        CHECK(path_is_tree(p));
        seen.insert(p.points);
    });
    CHECK(seen.size() == 40);
}

TEST_CASE("every tree shape is reached") {
    for (int n = 2; n <= 7; ++n) {
        const CoverageReport cov = verify_class_coverage(n);
        CHECK(cov.classes == oracle_tree_codes(n).size());
        CHECK(cov.covered == cov.classes);
        CHECK(cov.missing.empty());
        CHECK(cov.witnesses.size() == cov.classes);
    }

    const CoverageReport cov6 = verify_class_coverage(6);
    CHECK(cov6.tree_paths == 40);
    CHECK(cov6.self_mirror_paths == 0);
    // the first descent in lexicographic order is the star
    const LabeledTree star(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(cov6.witnesses.at(canonical_code(star)) == star_path(6));

    // only at n=2 is the lone pair its own reflection
    CHECK(verify_class_coverage(2).self_mirror_paths == 1);
    CHECK(verify_class_coverage(5).self_mirror_paths == 0);

    LatticeOptions par;
    par.jobs = 4;
    const CoverageReport cov6p = verify_class_coverage(6, par);
    CHECK(cov6p.tree_paths == cov6.tree_paths);
    CHECK(cov6p.witnesses.size() == cov6.witnesses.size());
    for (const auto& [code, path] : cov6.witnesses)
        CHECK(cov6p.witnesses.at(code) == path);
}

TEST_CASE("renderings") {
    CHECK(render_lattice(6) ==
          "            (1,6)\n"
          "         (1,5) (2,6)\n"
          "      (1,4) (2,5) (3,6)\n"
          "   (1,3) (2,4) (3,5) (4,6)\n"
          "(1,2) (2,3) (3,4) (4,5) (5,6)\n");
    CHECK(render_path(star_path(4)) ==
          "      [1,4]\n"
          "   [1,3] (2,4)\n"
          "[1,2] (2,3) (3,4)\n");
    CHECK(path_to_string(path_tree_path(6)) == "(1,6)->(1,5)->(2,5)->(2,4)->(3,4)");
}

TEST_CASE("lattice guard") {
    CHECK_THROWS_AS(count_lattice_paths(13, true), guard_error);
    LatticeOptions tight;
    tight.guard_n = 6;
    CHECK_THROWS_AS(count_lattice_paths(7, true, tight), guard_error);
}

}  // TEST_SUITE
