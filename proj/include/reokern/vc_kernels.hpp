#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reokern/crown.hpp"
#include "reokern/graph.hpp"
#include "reokern/instance.hpp"
#include "reokern/matching.hpp"

namespace reokern {

// Returns (g[R], k - |H|) with R re-indexed in ascending order. The
// parameter may be negative; callers treat that as "no".
// Throws error(invalid_crown).
std::pair<subgraph, int> crown_reduce_vc(const graph &g, int k, const crown_decomposition &cd);

kernel_result vc_kernelize_3k(const graph &g, int k);

// Split of a vertex cover A and its complement B along a maximum matching.
struct reopt_partition {
	vertex_set a;
	vertex_set b;
	matching m;
	vertex_set a_unmatched, b_unmatched;
	vertex_set a1, b1;
	vertex_set a2, b2;
	vertex_set a3, b3;

	crown_decomposition cd1() const;
	crown_decomposition cd2() const;
};

// Throws error(not_a_cover).
reopt_partition build_reopt_partition(const graph &g, const vertex_set &cover);
// Same split for a caller-supplied maximum matching between A and B.
reopt_partition build_reopt_partition_with(const graph &g, const vertex_set &cover, const matching &m);

// Human-readable list of broken partition invariants; empty when sound.
std::vector<std::string> validate_reopt_partition(const graph &g, const reopt_partition &p);

enum class reopt_vc_branch {
	cover_endpoint,
	isolated_endpoint,
	case1,
	case2,
	case3,
	case4,
	case5,
	case5_degenerate,
};

std::string_view to_string(reopt_vc_branch b);

struct reopt_vc_trace {
	// Branches in the order taken; rematches append the case they led to.
	std::vector<reopt_vc_branch> branches;
	// Graph the final crown lives on, with the map back to G+e.
	graph working;
	std::vector<vertex> to_modified;
	std::optional<crown_decomposition> crown;
	// Size bound the branch guarantees, in terms of |A|.
	std::size_t size_bound = 0;

	reopt_vc_branch final_branch() const { return branches.back(); }
};

struct reopt_vc_outcome {
	kernel_result result;
	reopt_vc_trace trace;
};

// Kernel for (G + e, k') given a vertex cover A of G with |A| <= k.
// Throws error(unsupported_problem), error(modification_mismatch),
// error(modification_invalid), error(witness_not_a_cover).
reopt_vc_outcome reopt_vc_kernelize_2k_traced(const reopt_instance &inst);
kernel_result reopt_vc_kernelize_2k(const reopt_instance &inst);

}  // namespace reokern
