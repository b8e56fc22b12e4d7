#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "reokern/graph.hpp"

namespace reokern {

enum class problem_kind {
	vertex_cover,
	connected_vertex_cover,
	ivst,
	longest_path,
	clique,
	set_cover,
	treewidth,
	leaf_out_tree,
};

enum class direction { min, max };

direction direction_of(problem_kind kind);
std::string_view to_string(problem_kind kind);
std::optional<problem_kind> parse_problem_kind(std::string_view name);

// Certificate for a yes-instance. Which fields are used depends on the
// problem:
//   vertex_cover, connected_vertex_cover, clique: vertices = the set;
//   longest_path: vertices = the path in order;
//   treewidth: vertices = an elimination ordering of all vertices;
//   ivst: edges = the subtree (a single vertex tree uses vertices);
//   set_cover: vertices = chosen family indices;
//   leaf_out_tree: edges = the tree arcs as (from, to).
struct solution {
	std::vector<vertex> vertices;
	std::vector<edge> edges;

	bool operator==(const solution &) const = default;
};

solution vertex_solution(const vertex_set &s);

// Set cover parameterized by universe size; elements are 1..universe.
struct set_cover_instance {
	int universe = 0;
	std::vector<std::vector<int>> family;
	int k = 0;

	bool operator==(const set_cover_instance &) const = default;
};

// Throws error(invalid_set_cover) unless members lie in 1..universe and
// 0 <= k <= universe.
void check_set_cover(const set_cover_instance &sc);

// ((x,k), s or absent, (x_lm, k')). The graph of x_lm is implied by applying
// the modification to the original graph.
struct reopt_instance {
	problem_kind problem = problem_kind::vertex_cover;
	graph original;
	int k = 0;
	std::optional<solution> witness;
	local_modification modification = edge_add{};
	int modified_k = 0;

	direction dir() const { return direction_of(problem); }
	graph modified_graph() const { return apply_modification(original, modification); }
};

// Parameter relation only (k' <= k for min, k' >= k for max).
bool parameter_relation_holds(const reopt_instance &inst);

struct decided {
	bool yes = false;
	bool operator==(const decided &) const = default;
};

struct reduced {
	graph g;
	int parameter = 0;
	std::size_t size_bound = 0;
	bool operator==(const reduced &) const = default;
};

struct kernel_result {
	std::variant<decided, reduced> value;

	static kernel_result yes() { return {decided{true}}; }
	static kernel_result no() { return {decided{false}}; }
	static kernel_result reduce(graph g, int parameter, std::size_t size_bound) {
		return {reduced{std::move(g), parameter, size_bound}};
	}

	bool is_decided() const { return std::holds_alternative<decided>(value); }
	bool is_reduced() const { return std::holds_alternative<reduced>(value); }
	std::optional<bool> decision() const {
		if (auto *d = std::get_if<decided>(&value))
			return d->yes;
		return std::nullopt;
	}
	const reduced &as_reduced() const { return std::get<reduced>(value); }

	// Vertex count of the reduced graph, 0 for decided results.
	std::size_t size() const { return is_reduced() ? as_reduced().g.vertex_count() : 0; }

	bool operator==(const kernel_result &) const = default;
};

// A concrete instance equivalent to a decided result; reduced results are
// returned unchanged. Vertex cover: yes = (K2, 1), no = (K2, 0).
reduced materialize(problem_kind kind, const kernel_result &r);

}  // namespace reokern
