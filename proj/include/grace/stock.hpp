#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

// Reading of "2-path emerging from a point" used when hunting doubly
// pre-pendant points: strict means the middle vertex must have degree 2;
// the alternate reading drops that requirement. Tests compare the two.
enum class TwoPathRule { MidpointDegreeTwo, AnyMidpoint };

struct StockOptions {
    int jobs = 1;  // >1 parallelizes each level's extension sweep
    int guard_n = 16;
    TwoPathRule two_path = TwoPathRule::MidpointDegreeTwo;
};

// All isomorphism classes of trees on n vertices, keyed by canonical code,
// each with one labeled representative.
struct Stock {
    int n = 0;
    std::map<std::string, LabeledTree> members;

    size_t size() const { return members.size(); }
    bool contains(const std::string& code) const { return members.count(code) != 0; }
};

// the tree grown by attaching new vertex n+1 at v
LabeledTree extend_at(const LabeledTree& t, int v);

// Vertices grouped by the canonical code of the one-vertex extension at
// them; extending at any two vertices of a block gives isomorphic trees.
// Blocks are sorted by smallest member, members ascending.
struct EquivalentPartition {
    std::vector<std::vector<int>> blocks;
};
EquivalentPartition equivalent_partition(const LabeledTree& t);

// codes of the pairwise nonisomorphic one-vertex extensions, one per block
std::set<std::string> complete_extension(const LabeledTree& t);

// Iterative construction: start with the one-vertex tree and extend every
// member at one vertex per block, collecting distinct codes per level.
Stock build_stock(int n, const StockOptions& opts = {});

// Special points of a tree. A point is singly pre-pendant (spr) when it has
// a pendant neighbor and deleting all its pendant neighbors leaves it with
// degree <= 1; doubly pre-pendant (dpr) likewise with both pendant neighbors
// and 2-paths hanging off it deleted. pspr/pdpr are the pendant points
// adjacent to spr/dpr points. special is the union of the four sets. The
// lone vertex of the one-vertex tree counts as special so extension
// recursions can start there.
struct SpecialPointReport {
    std::vector<int> spr, pspr, dpr, pdpr, special;
};
SpecialPointReport special_points(const LabeledTree& t,
                                  TwoPathRule rule = TwoPathRule::MidpointDegreeTwo);

// Same construction as build_stock but extending only at special points.
// Reaching every class this way is exactly what the stock equality tests
// verify at desk scale.
Stock stock_via_special_points(int n, const StockOptions& opts = {});

// For each class on n vertices: which (lower class, special vertex) pairs
// produce it by one-vertex extension at a special point. Producers are
// deduplicated per special-vertex orbit (vertices with equal rooted codes).
// Classes with a single producer mark that producer's point as essentially
// special: no other extension reaches the class.
struct ExtensionOrigins {
    int n = 0;
    // upper code -> (lower code, special vertex in the lower representative)
    std::map<std::string, std::vector<std::pair<std::string, int>>> producers;
    std::map<std::string, std::pair<std::string, int>> essential;
};
ExtensionOrigins extension_origins(int n, const StockOptions& opts = {});

// One graceful labeling with label 1 sitting on a special point. The vertex
// recorded is the matching special vertex of the stock representative, so
// entries for one class cover distinct special-point orbits.
struct GracefulLabelingEntry {
    int special_vertex = 0;
    LabeledTree tree;
    bool via_fallback = false;
};

struct SpecialGracefulReport {
    int n = 0;
    std::map<std::string, std::vector<GracefulLabelingEntry>> by_class;
    // classes the recursion alone failed to reach (filled exhaustively)
    std::vector<std::string> fallback_classes;
    // classes with no qualifying labeling at all, exhaustively confirmed
    std::vector<std::string> uncovered_classes;
    // per class: special vertices of the representative that no graceful
    // labeling can place label 1 on (exhaustively confirmed)
    std::map<std::string, std::vector<int>> unreachable_special_vertices;
};

// Grows labelings level by level: extend a stored labeling at its label-1
// vertex, give the new vertex the next label (which keeps the labeling
// graceful), and also take the complement relabeling, which moves label 1 to
// the new pendant. Candidates whose label-1 vertex is special are stored,
// one per (class, orbit). Missing orbits are filled by exhaustive search
// over that class's graceful labelings and flagged as fallback.
SpecialGracefulReport graceful_via_special_points(int n, const StockOptions& opts = {});

}  // namespace grace
