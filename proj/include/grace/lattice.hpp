#pragma once

// Triangular lattice of vertex pairs arranged by label difference.  Row d
// holds the pairs (i, i+d).  A path picks one pair per row, walking from the
// single pair in the top row down to difference 1; its pairs carry every
// difference exactly once, so a path that forms a tree is a gracefully
// labeled tree.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

struct LatticeOptions {
    int jobs = 1;
    int guard_n = 12;  // (n-1)! paths, keep the blowup in check
};

struct DeltaLattice {
    int n = 0;
    // rows[d] lists (i, i+d) for i = 1..n-d; rows[0] stays empty
    std::vector<std::vector<Edge>> rows;
};

DeltaLattice build_delta_lattice(int n);

struct LatticePath {
    int n = 0;
    // one pair per difference, stored apex first: points[m] has difference n-1-m
    std::vector<Edge> points;

    bool operator==(const LatticePath& o) const { return n == o.n && points == o.points; }
};

// accepts the points in any order, sorts them apex first, and validates that
// every difference 1..n-1 appears exactly once
LatticePath make_lattice_path(int n, std::vector<Edge> points);

bool path_is_tree(const LatticePath& p);

// the path's pairs as a labeled tree; throws when the pairs close a cycle
LabeledTree path_tree(const LatticePath& p);

// reflects every pair (i, j) to (n-j+1, n-i+1); differences are preserved,
// and on trees this is the complement relabeling
LatticePath mirror_path(const LatticePath& p);

// all pairs in the left column: the star labeled from its hub
LatticePath star_path(int n);

// the zigzag descent that labels an n-vertex path graph
LatticePath path_tree_path(int n);

// straight run of `pendants` points along the left boundary, then a zigzag:
// labels a star with that many pendants plus a path hanging off one of them;
// pendants = n-1 degenerates to the star, pendants = 1 to a path
LatticePath broom_path(int n, int pendants);

std::string path_to_string(const LatticePath& p);

// streams every path in lexicographic order (top row first, left to right);
// with require_tree, prefixes that close a cycle are pruned
void enumerate_lattice_paths(int n, bool require_tree,
                             const std::function<void(const LatticePath&)>& emit,
                             const LatticeOptions& opts = {});

std::uint64_t count_lattice_paths(int n, bool require_tree, const LatticeOptions& opts = {});

struct CoverageReport {
    int n = 0;
    std::uint64_t tree_paths = 0;    // paths whose pairs form a tree
    std::uint64_t classes = 0;       // unlabeled tree shapes on n vertices
    std::uint64_t covered = 0;       // shapes reached by at least one path
    std::uint64_t self_mirror_paths = 0;
    std::map<std::string, LatticePath> witnesses;  // shape code -> first path
    std::vector<std::string> missing;              // shape codes never reached
};

// checks that the tree paths reach every tree shape on n vertices
CoverageReport verify_class_coverage(int n, const LatticeOptions& opts = {});

// text drawings of the triangle, chosen pairs marked as [i,j]
std::string render_lattice(int n);
std::string render_path(const LatticePath& p);

}  // namespace grace
