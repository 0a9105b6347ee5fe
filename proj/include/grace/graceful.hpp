#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

struct GracefulOptions {
    int jobs = 1;           // >1 partitions the search on the first row's choice
    bool streaming = false; // lets the per-difference generator run past guard_n
    int guard_n = 10;
};

using EdgeSet = std::vector<Edge>;  // sorted

// Streams all (n-1)! graceful spanning subgraphs of K_n: for each difference
// d = n-1 down to 1 pick one of the n-d pairs {(i, i+d)}. Every emitted set
// carries edge labels {1, .., n-1} by construction; most are trees, the rest
// are disconnected with one or more cycles.
void enumerate_graceful_subgraphs(int n, const std::function<void(const EdgeSet&)>& emit,
                                  const GracefulOptions& opts = {});

// Two forms of the upper bound on the number of graceful spanning trees.
// They coincide for even n and disagree for odd n; neither is reconciled
// here, both are reported. The true count can exceed both (it does at n = 3
// and n = 5), which the tests document rather than hide.
struct TreeBound {
    uint64_t theorem_product = 0;    // tabulated product times 2^(alpha-1)
    uint64_t remark_closed_form = 0; // [n/2]! [n/2-1]! 2^([n/2]-1)
};
TreeBound graceful_tree_bound(int n);

struct GracefulCatalog {
    int n = 0;
    uint64_t factorial_count = 0;     // (n-1)!, the per-difference generator's total
    uint64_t raw_selections = 0;      // proper selections over the difference-matrix rows
    uint64_t nontree_selections = 0;  // raw selections whose edge set is not a tree
    uint64_t choice_vectors = 0;      // distinct row->difference assignments completed
    std::vector<EdgeSet> trees;       // distinct graceful spanning trees, sorted
    std::vector<EdgeSet> non_trees;   // distinct non-tree graceful subgraphs, sorted
    uint64_t bound_theorem = 0;
    uint64_t bound_remark = 0;
};

// Builds the catalog. Trees come from a backtracking search over the rows of
// the difference matrix of K_n (one entry per row, a bitmask keeping the
// chosen differences distinct, so completed selections use each difference
// exactly once); selections are classified tree/non-tree afterwards. The
// non_trees list is populated from the per-difference generator, so
// trees.size() + non_trees.size() == factorial_count.
GracefulCatalog build_graceful_catalog(int n, const GracefulOptions& opts = {});

// canonical code -> number of catalog trees in that isomorphism class
std::map<std::string, uint32_t> coverage_by_isomorphism(const GracefulCatalog& catalog);

}  // namespace grace
