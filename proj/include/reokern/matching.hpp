#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reokern/graph.hpp"

namespace reokern {

// Vertex-disjoint set of host edges.
class matching {
public:
	matching() = default;

	// Throws error(internal_invariant_broken) if e shares a vertex with a
	// pair already present.
	void add(edge e);
	void remove(edge e);

	std::size_t size() const noexcept { return mate_.size() / 2; }
	bool empty() const noexcept { return mate_.empty(); }
	bool is_matched(vertex v) const { return mate_.count(v) != 0; }
	std::optional<vertex> partner(vertex v) const;
	std::vector<edge> edges() const;
	bool contains(edge e) const;

	bool operator==(const matching &other) const { return mate_ == other.mate_; }

private:
	std::map<vertex, vertex> mate_;
};

// Every pair is a host edge and the pairs are disjoint.
bool is_valid_matching(const graph &g, const matching &m);

// Maximum matching using only edges between the two sides. Sides are scanned
// in ascending order; edges inside a side are ignored.
matching maximum_bipartite_matching(const graph &g, const vertex_set &side_a, const vertex_set &side_b);

// Greedy maximal matching over g.edges() in ascending order.
matching greedy_maximal_matching(const graph &g);

enum class alternating_start { unmatched_b, unmatched_a };

struct reachability {
	vertex_set a;
	vertex_set b;

	bool operator==(const reachability &) const = default;
};

// Breadth-first closure over alternating paths that leave the chosen
// unmatched side on non-matching edges and continue on matching edges. The
// starting unmatched vertices are not reported; everything reached on the
// opposite side and every matched partner reached back on the start side is.
reachability alternating_reachability(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                      const matching &m, alternating_start from);

// Same closure started from an explicit set of B-vertices.
reachability alternating_reachability_from(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                           const matching &m, const vertex_set &start_b);

// Flips one alternating path from target's partner to an unmatched B-vertex
// other than `forbidden`, leaving target exposed. nullopt when none exists.
// Throws error(target_unmatched).
std::optional<matching> rematch_to_expose(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                          const matching &m, vertex target,
                                          std::optional<vertex> forbidden = std::nullopt);

}  // namespace reokern
