#pragma once

#include <vector>

#include "reokern/graph.hpp"

namespace reokern {

// Tree over bag indices 0..bags.size()-1, given by its edge list.
struct tree_decomposition {
	std::vector<vertex_set> bags;
	std::vector<edge> tree;

	// max |X_i| - 1; -1 for no bags.
	int width() const;
};

// Bags cover V, every edge lies in a bag, bags containing a vertex induce a
// connected subtree, and `tree` is a tree on the bag indices.
bool is_valid_tree_decomposition(const graph &g, const tree_decomposition &td);

// Largest number of later neighbours any vertex has in the filled graph of
// the ordering. `order` must be a permutation of V.
int elimination_width(const graph &g, const std::vector<vertex> &order);

tree_decomposition decomposition_from_ordering(const graph &g, const std::vector<vertex> &order);

}  // namespace reokern
