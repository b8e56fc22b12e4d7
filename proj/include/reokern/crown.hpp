#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reokern/graph.hpp"
#include "reokern/matching.hpp"

namespace reokern {

// (C, H, R) with a matching of C x H saturating H.
struct crown_decomposition {
	vertex_set crown;
	vertex_set head;
	vertex_set rest;
	matching m;

	bool operator==(const crown_decomposition &) const = default;
};

enum class crown_violation_kind {
	crown_empty,
	crown_not_independent,
	edge_between_crown_and_rest,
	not_a_partition,
	matching_not_crown_head,
	head_not_saturated,
};

struct crown_violation {
	crown_violation_kind kind;
	std::string detail;
};

std::string_view to_string(crown_violation_kind kind);

// Empty result means valid.
std::vector<crown_violation> validate_crown(const graph &g, const crown_decomposition &cd);
inline bool is_valid_crown(const graph &g, const crown_decomposition &cd) {
	return validate_crown(g, cd).empty();
}

struct big_matching {
	matching m;
};

using crown_or_matching_result = std::variant<crown_decomposition, big_matching>;

// Either a matching of exactly k+1 edges or a crown decomposition. Requires
// no isolated vertices and at least 3k+1 vertices.
crown_or_matching_result crown_or_matching(const graph &g, int k);

}  // namespace reokern
