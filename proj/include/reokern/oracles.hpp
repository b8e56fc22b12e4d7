#pragma once

#include <cstddef>
#include <vector>

#include "reokern/graph.hpp"
#include "reokern/instance.hpp"
#include "reokern/tree_decomposition.hpp"

namespace reokern {

// Exhaustive solvers. `feasible` is false only for connected vertex cover on
// graphs whose edges span two or more components.
struct exact_solution {
	int value = 0;
	solution witness;
	bool feasible = true;
};

struct oracle_limits {
	std::size_t vc_vertices = 40;
	std::size_t cvc_vertices = 64;
	std::size_t ivst_vertices = 12;
	std::size_t longest_path_vertices = 16;
	std::size_t clique_vertices = 40;
	std::size_t set_cover_sets = 20;
	std::size_t treewidth_vertices = 12;
	std::size_t lot_vertices = 8;
	std::size_t lot_arcs = 16;
};

const oracle_limits &default_limits();

bool is_vertex_cover(const graph &g, const vertex_set &s);
bool is_connected_vertex_cover(const graph &g, const vertex_set &s);

// Witness is the lexicographically smallest minimum cover.
exact_solution solve_vertex_cover(const graph &g, const oracle_limits &lim = default_limits());
// All minimum vertex covers in lexicographic order.
std::vector<vertex_set> all_minimum_vertex_covers(const graph &g, const oracle_limits &lim = default_limits());
exact_solution solve_connected_vertex_cover(const graph &g, const oracle_limits &lim = default_limits());
// Maximum number of internal vertices over all subtrees.
exact_solution solve_ivst(const graph &g, const oracle_limits &lim = default_limits());
// Longest simple path, value in edges; 0 on the empty graph.
exact_solution solve_longest_path(const graph &g, const oracle_limits &lim = default_limits());
exact_solution solve_clique(const graph &g, const oracle_limits &lim = default_limits());
// Witness is an optimal elimination ordering.
exact_solution solve_treewidth(const graph &g, const oracle_limits &lim = default_limits());
tree_decomposition optimal_tree_decomposition(const graph &g, const oracle_limits &lim = default_limits());
// Value is the smallest number of sets covering the universe; infeasible when
// some element is in no set.
exact_solution solve_set_cover(const set_cover_instance &sc, const oracle_limits &lim = default_limits());
// Leaves are non-root vertices without out-arcs.
exact_solution solve_leaf_out_tree(const digraph &d, const oracle_limits &lim = default_limits());

// Graph problems only; set cover and leaf out tree have their own overloads.
exact_solution solve_exact(problem_kind kind, const graph &g, const oracle_limits &lim = default_limits());

// (g, k) in L: value <= k for min problems, value >= k for max problems.
bool is_member(problem_kind kind, const graph &g, int k, const oracle_limits &lim = default_limits());
bool is_member(const set_cover_instance &sc);
bool is_member(const digraph &d, int k);
// Membership of the modified instance (x_lm, k').
bool is_member(const reopt_instance &inst, const oracle_limits &lim = default_limits());

bool verify_solution(problem_kind kind, const graph &g, int k, const solution &candidate);
bool verify_solution(const set_cover_instance &sc, const solution &candidate);
bool verify_solution(const digraph &d, int k, const solution &candidate);

// Value the candidate attains, or nullopt if it is not a feasible solution.
std::optional<int> solution_value(problem_kind kind, const graph &g, const solution &candidate);

bool verify_kernel_equivalence(problem_kind kind, const graph &g, int k, const kernel_result &result,
                               const oracle_limits &lim = default_limits());

}  // namespace reokern
