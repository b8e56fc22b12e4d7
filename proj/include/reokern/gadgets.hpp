#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reokern/graph.hpp"
#include "reokern/instance.hpp"
#include "reokern/oracles.hpp"

namespace reokern {

// IVST: P_{k+2}. Clique: K_k. Treewidth: K_{k+2}. LeafOutTree: out-star
// with k leaves. Throws precondition_violated for k < 1 and
// unsupported_problem otherwise.
std::variant<graph, digraph> build_extremal(problem_kind problem, int k);

enum class extremal_mode { minimal_yes, maximal_yes };

// minimal_yes: in L, and every single edge or vertex deletion leaves L.
// maximal_yes: in L, and every single edge addition leaves L.
// Treewidth is checked against its complement tw(G) > k. Throws
// oracle_too_slow when an oracle call would exceed its size guard.
bool is_extremal(const graph &g, problem_kind problem, int k, extremal_mode mode,
                 const oracle_limits &lim = default_limits());
bool is_extremal(const digraph &d, int k, extremal_mode mode);

enum class removal_kind { edge, vertex };

// ((g ⊎ B, k), witness, (g ⊎ B', k)) where B is the block and B' the block
// after one canonical deletion:
//   LongestPath: path with k edges, witness the path, middle edge or vertex 1;
//   IVST: P_{k+2}, witness its edges, middle edge or vertex 1;
//   Clique: K_k, witness the block, its first edge or first vertex;
//   Treewidth: K_{k+2}, no witness, its first edge or first vertex.
// Block vertices come after those of g. Throws unsupported_combination for
// other problems and precondition_violated when k is too small to delete.
reopt_instance build_negative_reopt_instance(problem_kind problem, const graph &g, int k, removal_kind removal);

enum class clique_mode { edge_add, vertex_add };

// edge_add: (K_{k+1} ⊎ G', k+1) with G' = g plus v1, v2 joined to all of g,
// adding v1v2 with k' = k+2. vertex_add: (K_k ⊎ g, k), adding v1 joined to
// all of g with k' = k+1. The block comes first.
reopt_instance build_clique_reopt_instance(const graph &g, int k, clique_mode mode);

// Set cover to connected vertex cover. Layout: grid u_{i,j} row-major
// (i = 1..k+2, j = 0..u), their leaves in the same order, f_1..f_t, x,
// v_1..v_{k+2}, f, y.
struct setcover_cvc_gadget {
	set_cover_instance sc;
	graph g;
	edge reopt_edge;
	int c = 0;
	vertex_set s1;

	int rows() const { return sc.k + 2; }
	int cols() const { return sc.universe + 1; }
	int sets() const { return static_cast<int>(sc.family.size()); }

	vertex u(int i, int j) const;
	vertex u_leaf(int i, int j) const;
	vertex f_set(int l) const;
	vertex x() const;
	vertex v(int i) const;
	vertex f() const;
	vertex y() const;

	graph modified_graph() const;
	// ((G, c+2), S1, EdgeAdd(x, u_{k+2,0}), c+1) for connected vertex cover.
	reopt_instance reopt_view() const;
};

setcover_cvc_gadget build_setcover_cvc(const set_cover_instance &sc);

// Grid, the chosen f_l (0-based family indices), x, f, v_{k+2}, y.
vertex_set s2_from_cover(const setcover_cvc_gadget &gadget, const std::vector<int> &cover);

// Structural invariant violations, empty when the gadget is well formed.
std::vector<std::string> gadget_violations(const setcover_cvc_gadget &gadget);

}  // namespace reokern
