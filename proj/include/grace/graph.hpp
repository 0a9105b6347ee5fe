#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grace {

// Vertices are the labels 1..n throughout; an edge always stores i < j.
using Edge = std::pair<int, int>;

Edge make_edge(int i, int j);

// Simple undirected graph on labeled vertices 1..n.
// Edge list is kept sorted lexicographically and duplicate-free.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int n_, std::vector<Edge> edges_);  // validates and normalizes

    int q() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    bool has_edge(int i, int j) const;
    bool connected() const;

    static Graph complete(int n);  // K_n, edges in lexicographic order
};

// A spanning tree of K_n carrying its vertex labels: n vertices, n-1 edges,
// connected and acyclic. The constructor rejects anything else.
struct LabeledTree {
    int n = 0;
    std::vector<Edge> edges;

    LabeledTree() = default;
    LabeledTree(int n_, std::vector<Edge> edges_);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
};

// true iff the n-1 edges form a spanning tree on vertices 1..n
bool is_tree(int n, const std::vector<Edge>& edges);

// |i - j| for each edge, sorted ascending
std::vector<int> edge_label_values(int n, const std::vector<Edge>& edges);

// A tree is graceful when its edge labels |i-j| are exactly {1, .., n-1}.
bool is_graceful_tree(const LabeledTree& t);
bool is_graceful_edge_set(int n, const std::vector<Edge>& edges);  // no tree requirement

// The relabeling j -> n-j+1. It maps edge label |i-j| to itself, so it
// carries graceful trees to graceful trees.
std::vector<Edge> complement_relabel(int n, const std::vector<Edge>& edges);
LabeledTree complement_relabel(const LabeledTree& t);

// ------------------------------------------------------------------
// Incidence-style matrices of a graph, all with the row for vertex n
// removed: rows = vertices 1..n-1, columns = edges in edge-list order.

// 0/1 entries: x(v,e) = 1 iff v is an endpoint of edge e.
struct ReducedIncidenceMatrix {
    int rows = 0, cols = 0;
    std::vector<uint8_t> x;  // row-major

    bool at(int r, int c) const { return x[static_cast<size_t>(r) * cols + c] != 0; }
};

// Where the incidence entry is 1, holds the vertex pair (v, other endpoint);
// zero entries hold (0,0). Pairs are ordered row-vertex first, like the
// row-3 entry (3,1) for edge {1,3}.
struct PairMatrix {
    int rows = 0, cols = 0;
    std::vector<Edge> y;

    Edge at(int r, int c) const { return y[static_cast<size_t>(r) * cols + c]; }
};

// Absolute differences |i-j| of the pair entries; 0 where there is no entry.
struct DifferenceMatrix {
    int rows = 0, cols = 0;
    std::vector<int> z;

    int at(int r, int c) const { return z[static_cast<size_t>(r) * cols + c]; }
};

struct GraphMatrices {
    ReducedIncidenceMatrix incidence;
    PairMatrix pairs;
    DifferenceMatrix differences;
};

// Builds all three aligned matrices. Row r (0-based) is vertex r+1;
// column c is edges[c].
GraphMatrices build_matrices(const Graph& g);

// Thrown when an enumeration would exceed its configured size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace grace
