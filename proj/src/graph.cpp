#include "grace/graph.hpp"

#include <algorithm>

#include "grace/dsu.hpp"

namespace grace {

Edge make_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self-loop edge");
    if (i > j) std::swap(i, j);
    return {i, j};
}

Graph::Graph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first < 1 || e.second > n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [i, j] : edges) d += (i == v || j == v);
    return d;
}

bool Graph::has_edge(int i, int j) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(i, j));
}

bool Graph::connected() const {
    Dsu dsu(n + 1);
    int parts = n;
    for (const auto& [i, j] : edges)
        if (dsu.unite(i, j)) --parts;
    return parts == 1;
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

LabeledTree::LabeledTree(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    if (!is_tree(n, edges)) throw std::invalid_argument("edge set is not a spanning tree");
}

int LabeledTree::degree(int v) const {
    int d = 0;
    for (const auto& [i, j] : edges) d += (i == v || j == v);
    return d;
}

std::vector<int> LabeledTree::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [i, j] : edges) {
        if (i == v) out.push_back(j);
        if (j == v) out.push_back(i);
    }
    return out;
}

bool is_tree(int n, const std::vector<Edge>& edges) {
    if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
    Dsu dsu(n + 1);
    for (const auto& [i, j] : edges) {
        if (i < 1 || j > n || i >= j) return false;
        if (!dsu.unite(i, j)) return false;  // cycle
    }
    return true;  // n-1 acyclic edges on n vertices are connected
}

std::vector<int> edge_label_values(int n, const std::vector<Edge>& edges) {
    (void)n;
    std::vector<int> labels;
    labels.reserve(edges.size());
    for (const auto& [i, j] : edges) labels.push_back(j - i);
    std::sort(labels.begin(), labels.end());
    return labels;
}

bool is_graceful_edge_set(int n, const std::vector<Edge>& edges) {
    auto labels = edge_label_values(n, edges);
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k] != static_cast<int>(k) + 1) return false;
    return labels.size() == static_cast<size_t>(n) - 1;
}

bool is_graceful_tree(const LabeledTree& t) { return is_graceful_edge_set(t.n, t.edges); }

std::vector<Edge> complement_relabel(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [i, j] : edges) out.push_back(make_edge(n - i + 1, n - j + 1));
    std::sort(out.begin(), out.end());
    return out;
}

LabeledTree complement_relabel(const LabeledTree& t) {
    return LabeledTree(t.n, complement_relabel(t.n, t.edges));
}

GraphMatrices build_matrices(const Graph& g) {
    GraphMatrices m;
    const int rows = g.n - 1, cols = g.q();
    m.incidence = {rows, cols, std::vector<uint8_t>(static_cast<size_t>(rows) * cols, 0)};
    m.pairs = {rows, cols, std::vector<Edge>(static_cast<size_t>(rows) * cols, {0, 0})};
    m.differences = {rows, cols, std::vector<int>(static_cast<size_t>(rows) * cols, 0)};
    for (int c = 0; c < cols; ++c) {
        const auto& [i, j] = g.edges[c];
        for (int v : {i, j}) {
            if (v == g.n) continue;  // the row for vertex n is deleted
            const size_t idx = static_cast<size_t>(v - 1) * cols + c;
            m.incidence.x[idx] = 1;
            m.pairs.y[idx] = {v, v == i ? j : i};  // row vertex first
            m.differences.z[idx] = j - i;
        }
    }
    return m;
}

}  // namespace grace
