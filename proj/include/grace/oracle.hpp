#pragma once

// Small brute-force baselines.  Everything here works by exhaustion over
// subsets, sequences, or bijections, so results are slow but independent of
// the enumeration code they back-check.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

// every (n-1)-subset of host edges that forms a tree
std::vector<std::vector<Edge>> oracle_spanning_trees(const Graph& host);

std::uint64_t oracle_spanning_tree_count(const Graph& host);

// every gracefully labeled tree on labels 1..n, by scanning edge subsets of
// the complete graph
std::vector<std::vector<Edge>> oracle_graceful_trees(int n);

// tree built from a length n-2 sequence over 1..n
LabeledTree prufer_decode(int n, const std::vector<int>& seq);

// canonical codes of all tree shapes on n vertices, via all n^(n-2) sequences
std::set<std::string> oracle_tree_codes(int n);

// tries every vertex bijection
bool oracle_isomorphic(const LabeledTree& a, const LabeledTree& b);

// smallest degree cap under which the host has a gracefully labeled spanning
// tree; empty when no spanning tree is graceful as labeled
std::optional<int> oracle_graceful_degree_threshold(const Graph& host);

}  // namespace grace
