#include "reokern/instance.hpp"

#include "reokern/error.hpp"

namespace reokern {

namespace {

struct kind_name {
	problem_kind kind;
	std::string_view name;
};

constexpr kind_name kind_names[] = {
	{problem_kind::vertex_cover, "VertexCover"},
	{problem_kind::connected_vertex_cover, "ConnectedVertexCover"},
	{problem_kind::ivst, "IVST"},
	{problem_kind::longest_path, "LongestPath"},
	{problem_kind::clique, "Clique"},
	{problem_kind::set_cover, "SetCover"},
	{problem_kind::treewidth, "Treewidth"},
	{problem_kind::leaf_out_tree, "LeafOutTree"},
};

// accepted on input only
constexpr kind_name kind_aliases[] = {
	{problem_kind::vertex_cover, "vertex_cover"},
	{problem_kind::vertex_cover, "vc"},
	{problem_kind::connected_vertex_cover, "connected_vertex_cover"},
	{problem_kind::connected_vertex_cover, "cvc"},
	{problem_kind::ivst, "ivst"},
	{problem_kind::longest_path, "longest_path"},
	{problem_kind::clique, "clique"},
	{problem_kind::set_cover, "set_cover"},
	{problem_kind::treewidth, "treewidth"},
	{problem_kind::leaf_out_tree, "leaf_out_tree"},
};

}  // namespace

direction direction_of(problem_kind kind) {
	switch (kind) {
	case problem_kind::vertex_cover:
	case problem_kind::connected_vertex_cover:
	case problem_kind::set_cover:
	case problem_kind::treewidth:
		return direction::min;
	case problem_kind::ivst:
	case problem_kind::longest_path:
	case problem_kind::clique:
	case problem_kind::leaf_out_tree:
		return direction::max;
	}
	return direction::min;
}

std::string_view to_string(problem_kind kind) {
	for (const auto &kn : kind_names)
		if (kn.kind == kind)
			return kn.name;
	return "unknown";
}

std::optional<problem_kind> parse_problem_kind(std::string_view name) {
	for (const auto &kn : kind_names)
		if (kn.name == name)
			return kn.kind;
	for (const auto &kn : kind_aliases)
		if (kn.name == name)
			return kn.kind;
	return std::nullopt;
}

solution vertex_solution(const vertex_set &s) {
	return {std::vector<vertex>(s.begin(), s.end()), {}};
}

void check_set_cover(const set_cover_instance &sc) {
	if (sc.universe < 0)
		throw error(error_code::invalid_set_cover, "negative universe size");
	if (sc.k < 0 || sc.k > sc.universe)
		throw error(error_code::invalid_set_cover, "k must satisfy 0 <= k <= u");
	for (std::size_t i = 0; i < sc.family.size(); ++i)
		for (int x : sc.family[i])
			if (x < 1 || x > sc.universe)
				throw error(error_code::invalid_set_cover,
				            "set " + std::to_string(i) + " has element " + std::to_string(x) + " outside 1..u");
}

bool parameter_relation_holds(const reopt_instance &inst) {
	return inst.dir() == direction::min ? inst.modified_k <= inst.k : inst.modified_k >= inst.k;
}

reduced materialize(problem_kind kind, const kernel_result &r) {
	if (r.is_reduced())
		return r.as_reduced();
	const bool yes = *r.decision();
	switch (kind) {
	case problem_kind::vertex_cover:
	case problem_kind::connected_vertex_cover:
		return {graphs::path(2), yes ? 1 : 0, 2};
	case problem_kind::treewidth:
		// tw(K2) = 1
		return {graphs::path(2), yes ? 1 : 0, 2};
	case problem_kind::clique:
		return {graphs::path(2), yes ? 2 : 3, 2};
	case problem_kind::longest_path:
		return {graphs::path(2), yes ? 1 : 2, 2};
	case problem_kind::ivst:
		// P3 has exactly one internal vertex.
		return {graphs::path(3), yes ? 1 : 2, 3};
	default:
		throw error(error_code::unsupported_problem, "materialize: " + std::string(to_string(kind)));
	}
}

}  // namespace reokern
