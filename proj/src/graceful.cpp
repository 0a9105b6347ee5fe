#include "grace/graceful.hpp"

#include <algorithm>
#include <set>

#include "grace/canonical.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace grace {

namespace {

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<uint64_t>(k);
    return f;
}

struct SelectionAccum {
    uint64_t raw = 0;
    uint64_t nontree = 0;
    uint64_t choice_vectors = 0;
    std::vector<EdgeSet> trees;
};

// Backtracking over rows 1..n-1: row r picks an edge (r, j), j != r, whose
// difference is still free. diff_of[r] remembers the assignment so a change
// in the row->difference vector can be detected at the leaf.
void select_rows(int n, int row, uint32_t used_diffs, std::vector<Edge>& picked,
                 std::vector<int>& diff_of, std::set<std::vector<int>>& seen_cvs,
                 SelectionAccum& acc) {
    if (row == n) {
        ++acc.raw;
        if (seen_cvs.insert(diff_of).second) ++acc.choice_vectors;
        EdgeSet sorted(picked);
        std::sort(sorted.begin(), sorted.end());
        if (is_tree(n, sorted))
            acc.trees.push_back(std::move(sorted));
        else
            ++acc.nontree;
        return;
    }
    for (int j = 1; j <= n; ++j) {
        if (j == row) continue;
        const int d = j > row ? j - row : row - j;
        if (used_diffs & (1u << d)) continue;
        picked.push_back(make_edge(row, j));
        diff_of[row - 1] = d;
        select_rows(n, row + 1, used_diffs | (1u << d), picked, diff_of, seen_cvs, acc);
        picked.pop_back();
    }
}

}  // namespace

void enumerate_graceful_subgraphs(int n, const std::function<void(const EdgeSet&)>& emit,
                                  const GracefulOptions& opts) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (n > opts.guard_n && !opts.streaming) throw guard_error("n over guard, pass streaming");
    EdgeSet picked;
    picked.reserve(n - 1);
    std::function<void(int)> rec = [&](int d) {
        if (d == 0) {
            EdgeSet sorted(picked);
            std::sort(sorted.begin(), sorted.end());
            emit(sorted);
            return;
        }
        for (int i = 1; i + d <= n; ++i) {
            picked.emplace_back(i, i + d);
            rec(d - 1);
            picked.pop_back();
        }
    };
    rec(n - 1);
}

TreeBound graceful_tree_bound(int n) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    const int alpha = n / 2;
    TreeBound b;
    // ascending 1..alpha, then descending (alpha-1)..1 for even n;
    // for odd n the peak value alpha appears twice.
    uint64_t prod = 1;
    for (int k = 1; k <= alpha; ++k) prod *= static_cast<uint64_t>(k);
    if (n % 2 == 1) prod *= static_cast<uint64_t>(alpha);
    for (int k = alpha - 1; k >= 1; --k) prod *= static_cast<uint64_t>(k);
    b.theorem_product = prod << (alpha - 1);

    uint64_t closed = factorial(alpha) * factorial(alpha - 1);
    b.remark_closed_form = closed << (alpha - 1);
    return b;
}

GracefulCatalog build_graceful_catalog(int n, const GracefulOptions& opts) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (n > opts.guard_n) throw guard_error("n over guard for catalog construction");

    GracefulCatalog cat;
    cat.n = n;
    cat.factorial_count = factorial(n - 1);
    const TreeBound b = graceful_tree_bound(n);
    cat.bound_theorem = b.theorem_product;
    cat.bound_remark = b.remark_closed_form;

    // proper selections, partitioned on the first row's choice when parallel
    SelectionAccum total;
    std::set<std::vector<int>> seen_cvs;
    if (opts.jobs <= 1 || n < 3) {
        std::vector<Edge> picked;
        picked.reserve(n - 1);
        std::vector<int> diff_of(n - 1, 0);
        select_rows(n, 1, 0, picked, diff_of, seen_cvs, total);
    } else {
#if defined(_OPENMP)
        // row 1 can take any edge (1, j); each branch owns one choice, and
        // a tree lands in exactly one branch, so merging is concatenation
        std::vector<SelectionAccum> local(n - 1);
        std::vector<std::set<std::vector<int>>> local_cvs(n - 1);
#pragma omp parallel for num_threads(opts.jobs) schedule(dynamic)
        for (int j = 2; j <= n; ++j) {
            const int d = j - 1;
            std::vector<Edge> picked{make_edge(1, j)};
            picked.reserve(n - 1);
            std::vector<int> diff_of(n - 1, 0);
            diff_of[0] = d;
            select_rows(n, 2, 1u << d, picked, diff_of, local_cvs[j - 2], local[j - 2]);
        }
        for (int p = 0; p < n - 1; ++p) {
            total.raw += local[p].raw;
            total.nontree += local[p].nontree;
            total.choice_vectors += local[p].choice_vectors;
            total.trees.insert(total.trees.end(), local[p].trees.begin(), local[p].trees.end());
        }
#else
        std::vector<Edge> picked;
        picked.reserve(n - 1);
        std::vector<int> diff_of(n - 1, 0);
        select_rows(n, 1, 0, picked, diff_of, seen_cvs, total);
#endif
    }

    cat.raw_selections = total.raw;
    cat.nontree_selections = total.nontree;
    cat.choice_vectors = total.choice_vectors;
    std::sort(total.trees.begin(), total.trees.end());
    total.trees.erase(std::unique(total.trees.begin(), total.trees.end()), total.trees.end());
    cat.trees = std::move(total.trees);

    // non-tree graceful subgraphs from the per-difference generator; each
    // edge set shows up exactly once there, so no dedup is needed
    GracefulOptions gen = opts;
    gen.streaming = true;
    enumerate_graceful_subgraphs(
        n,
        [&](const EdgeSet& es) {
            if (!is_tree(n, es)) cat.non_trees.push_back(es);
        },
        gen);
    std::sort(cat.non_trees.begin(), cat.non_trees.end());
    return cat;
}

std::map<std::string, uint32_t> coverage_by_isomorphism(const GracefulCatalog& catalog) {
    std::map<std::string, uint32_t> classes;
    for (const auto& es : catalog.trees) ++classes[canonical_code(LabeledTree(catalog.n, es))];
    return classes;
}

}  // namespace grace
