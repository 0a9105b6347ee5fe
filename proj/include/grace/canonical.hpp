#pragma once

#include <string>
#include <vector>

#include "grace/graph.hpp"

namespace grace {

// Canonical form for unlabeled trees. The code of a rooted tree is the
// parenthesization "(" + sorted child codes + ")"; the code of a free tree
// roots at its center, taking the lexicographic minimum over both centers
// when the tree is bicentral. Two trees have equal codes iff they are
// isomorphic, so codes double as isomorphism-class keys in the stocks.

// one or two center vertices, found by peeling leaf layers
std::vector<int> tree_centers(const LabeledTree& t);

// code of t rooted at the given vertex
std::string rooted_code(const LabeledTree& t, int root);

// center-rooted canonical code of the free tree
std::string canonical_code(const LabeledTree& t);

// An explicit isomorphism t -> u (image[v] = vertex of u matching v of t),
// built by pairing canonical traversals. Empty when the trees are not
// isomorphic.
std::vector<int> isomorphism_map(const LabeledTree& t, const LabeledTree& u);

}  // namespace grace
