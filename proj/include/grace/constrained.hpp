#pragma once

// Spanning tree search inside an arbitrary host graph, with a per-vertex
// degree cap.  The graceful variant works on the host's pairs arranged by
// label difference: it still picks one pair per difference, so a hit is a
// gracefully labeled spanning tree of the host as labeled.

#include <cstdint>
#include <functional>
#include <vector>

#include "grace/graph.hpp"
#include "grace/lattice.hpp"

namespace grace {

// the difference-ordered lattice restricted to the host's edges
struct ModifiedDeltaLattice {
    int n = 0;
    std::vector<std::vector<Edge>> rows;  // rows[d]: host edges with difference d
};

ModifiedDeltaLattice build_modified_lattice(const Graph& host);

enum class SearchOutcome {
    Found,
    InfeasibleEmptyRow,  // some difference has no host edge at all
    Exhausted,
};

struct SearchStats {
    std::uint64_t nodes = 0;  // edges tried across the whole search
};

struct ConstrainedOptions {
    int max_degree = 0;  // 0 means unconstrained
    std::uint64_t max_nodes = 500'000'000;
};

// first gracefully labeled spanning tree with all degrees <= max_degree,
// searching rows top difference first, host edges left to right
SearchOutcome find_constrained_graceful_tree(const Graph& host, const ConstrainedOptions& opts,
                                             LatticePath& out, SearchStats* stats = nullptr);

// all of them, in search order
std::uint64_t enumerate_constrained_graceful_trees(
    const Graph& host, const ConstrainedOptions& opts,
    const std::function<void(const LatticePath&)>& emit, SearchStats* stats = nullptr);

// degree-capped spanning tree without the labeling requirement: any n-1 host
// edges that are acyclic; used when no graceful pick exists
SearchOutcome find_constrained_spanning_tree(const Graph& host, const ConstrainedOptions& opts,
                                             std::vector<Edge>& out, SearchStats* stats = nullptr);

}  // namespace grace
