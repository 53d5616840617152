#pragma once

#include <string>
#include <vector>

#include "uenergy/graph.hpp"

namespace uenergy {

// Level sequence of a rooted tree: vertex depths in preorder, root at level 1.
// The canonical representative is the lexicographically largest sequence over
// all child orderings, obtained by emitting child subtrees in decreasing order.
using LevelSequence = std::vector<int>;

// Canonical level sequence of the component of `tree` containing `root`.
// The graph must be acyclic on that component.
LevelSequence canonical_level_sequence(const Graph& tree, int root);

// Isomorphism-invariant code of a free tree (connected acyclic graph): the
// larger of the canonical level sequences rooted at its one or two centres.
LevelSequence free_tree_code(const Graph& tree);

// Compact key form for hashing and display: one base-36 digit per level.
std::string level_sequence_key(const LevelSequence& seq);

// All rooted trees on k vertices, as canonical level sequences, in the order
// the Beyer-Hedetniemi successor rule produces them (path first, star last).
std::vector<LevelSequence> rooted_trees(int k);

// Parent of each position in a level sequence (-1 for the root).
std::vector<int> level_sequence_parents(const LevelSequence& seq);

} // namespace uenergy
