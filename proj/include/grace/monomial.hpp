#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

struct MonomialOptions {
    int jobs = 1;                        // >1 partitions work on the first row's choice
    int max_rows = 25;                   // refuse wider matrices outright
    uint64_t max_raw = 20'000'000;       // refuse when the raw vector count exceeds this
};

// One selection of a nonzero entry from every row of the reduced incidence
// matrix, recorded as the chosen column indices sorted ascending. A vector
// may repeat a column (the same edge picked from both its endpoint rows).
using ColumnVector = std::vector<int>;

// Streams every raw selection, product over rows of the row degree in total.
// Vectors arrive with components sorted; order of arrival is unspecified.
void enumerate_monomials(const Graph& g, const std::function<void(const ColumnVector&)>& emit,
                         const MonomialOptions& opts = {});

// expected raw vector count (product of row degrees), saturating at UINT64_MAX
uint64_t raw_monomial_count(const Graph& g);

struct MonomialClassification {
    uint64_t raw_count = 0;         // all selections
    uint64_t degenerate_count = 0;  // selections that repeated a column
    // distinct column sets that occurred exactly once: spanning trees
    std::vector<ColumnVector> spanning_trees;
    // distinct column sets that occurred more than once, with multiplicity:
    // disconnected subgraphs containing a cycle
    std::vector<std::pair<ColumnVector, uint32_t>> cyclic_subgraphs;
};

// Tallies every raw selection by its sorted column content. Among
// repeat-free vectors, multiplicity one is equivalent to the columns forming
// a spanning tree; higher multiplicity means a disconnected cyclic subgraph.
// Output lists are sorted, so results are identical for any jobs value.
MonomialClassification classify_monomials(const Graph& g, const MonomialOptions& opts = {});

// Diagnosis of one (n-1)-column square submatrix. The singularity test runs
// over GF(2), where det equals the permanent mod 2; over the integers an odd
// cycle in the columns yields det +-2, so the integer determinant cannot
// separate trees from cyclic column sets and is reported only for reference.
struct ColumnSetDiagnosis {
    uint64_t monomial_count = 0;  // selections of distinct rows covering these columns
    bool singular = false;        // GF(2) determinant is zero
    long long det_integer = 0;    // exact integer determinant (Bareiss)
};

// columns: n-1 distinct indices into g.edges
ColumnSetDiagnosis diagnose_column_set(const Graph& g, const std::vector<int>& columns);

}  // namespace grace
