#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reokern/crown.hpp"
#include "reokern/graph.hpp"
#include "reokern/instance.hpp"

namespace reokern {

inline constexpr int document_version = 1;

// Everything an instance file can carry. Digraph instances keep their arcs
// beside an edgeless graph on the same n.
struct instance_document {
	int version = document_version;
	std::optional<problem_kind> problem;
	graph g;
	std::optional<std::vector<digraph::arc>> arcs;
	std::optional<int> k;
	std::optional<int> k_prime;
	std::optional<solution> witness;
	std::optional<local_modification> modification;
	std::optional<set_cover_instance> set_cover;
	std::optional<crown_decomposition> crown;

	bool operator==(const instance_document &) const = default;

	digraph to_digraph() const;
};

// Canonical JSON when the text starts with '{', DIMACS edge list otherwise.
// Throws error(parse_error) naming the line or field.
instance_document parse_instance(std::string_view text);
instance_document parse_json_instance(std::string_view text);
instance_document parse_dimacs(std::string_view text);

std::string emit_instance(const instance_document &doc);
// "p edge n m" followed by 1-indexed "e u v" lines; labels are dropped.
std::string emit_dimacs(const graph &g);

std::string_view modification_type(const local_modification &m);

}  // namespace reokern
