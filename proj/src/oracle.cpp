#include "grace/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "grace/canonical.hpp"

namespace grace {

namespace {

// calls visit(subset) for every k-subset of edges, in index order
template <typename Visit>
void each_edge_subset(const std::vector<Edge>& edges, int k, Visit&& visit) {
    const int q = static_cast<int>(edges.size());
    if (k < 0 || k > q) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Edge> subset(k);
    while (true) {
        for (int a = 0; a < k; ++a) subset[a] = edges[idx[a]];
        visit(subset);
        int a = k - 1;
        while (a >= 0 && idx[a] == q - k + a) --a;
        if (a < 0) break;
        ++idx[a];
        for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
    }
}

void check_subset_size(const Graph& host) {
    if (host.n > 8) throw guard_error("edge subset scan limited to 8 vertices");
}

}  // namespace

std::vector<std::vector<Edge>> oracle_spanning_trees(const Graph& host) {
    check_subset_size(host);
    std::vector<std::vector<Edge>> out;
    each_edge_subset(host.edges, host.n - 1, [&](const std::vector<Edge>& subset) {
        if (is_tree(host.n, subset)) out.push_back(subset);
    });
    return out;
}

std::uint64_t oracle_spanning_tree_count(const Graph& host) {
    check_subset_size(host);
    std::uint64_t count = 0;
    each_edge_subset(host.edges, host.n - 1, [&](const std::vector<Edge>& subset) {
        if (is_tree(host.n, subset)) ++count;
    });
    return count;
}

std::vector<std::vector<Edge>> oracle_graceful_trees(int n) {
    const Graph k = Graph::complete(n);
    check_subset_size(k);
    std::vector<std::vector<Edge>> out;
    each_edge_subset(k.edges, n - 1, [&](const std::vector<Edge>& subset) {
        if (is_graceful_edge_set(n, subset) && is_tree(n, subset)) out.push_back(subset);
    });
    return out;
}

LabeledTree prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2 || seq.size() != static_cast<std::size_t>(n - 2))
        throw std::invalid_argument("sequence must have n-2 entries");
    std::vector<int> degree(n + 1, 1);
    for (int x : seq) {
        if (x < 1 || x > n) throw std::invalid_argument("sequence entry out of range");
        ++degree[x];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return LabeledTree(n, std::move(edges));
}

std::set<std::string> oracle_tree_codes(int n) {
    if (n > 9) throw guard_error("sequence scan limited to 9 vertices");
    std::set<std::string> codes;
    if (n == 1) {
        codes.insert(canonical_code(LabeledTree(1, {})));
        return codes;
    }
    std::vector<int> seq(n - 2, 1);
    while (true) {
        codes.insert(canonical_code(prufer_decode(n, seq)));
        int a = static_cast<int>(seq.size()) - 1;
        while (a >= 0 && seq[a] == n) --a;
        if (a < 0) break;
        ++seq[a];
        for (std::size_t b = a + 1; b < seq.size(); ++b) seq[b] = 1;
    }
    return codes;
}

bool oracle_isomorphic(const LabeledTree& a, const LabeledTree& b) {
    if (a.n != b.n) return false;
    if (a.n > 8) throw guard_error("bijection scan limited to 8 vertices");
    std::set<Edge> target(b.edges.begin(), b.edges.end());
    std::vector<int> image(a.n);
    std::iota(image.begin(), image.end(), 1);
    do {
        bool match = true;
        for (const auto& [i, j] : a.edges)
            if (!target.count(make_edge(image[i - 1], image[j - 1]))) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(image.begin(), image.end()));
    return false;
}

std::optional<int> oracle_graceful_degree_threshold(const Graph& host) {
    if (host.n > 10) throw guard_error("edge subset scan limited to 10 vertices");
    std::optional<int> best;
    each_edge_subset(host.edges, host.n - 1, [&](const std::vector<Edge>& subset) {
        if (!is_graceful_edge_set(host.n, subset) || !is_tree(host.n, subset)) return;
        int maxdeg = 0;
        std::vector<int> degree(host.n + 1, 0);
        for (const auto& [i, j] : subset) maxdeg = std::max({maxdeg, ++degree[i], ++degree[j]});
        if (!best || maxdeg < *best) best = maxdeg;
    });
    return best;
}

}  // namespace grace
