#include "reokern/matching.hpp"

#include <deque>
#include <functional>

#include "reokern/error.hpp"

namespace reokern {

void matching::add(edge e) {
	e = make_edge(e.u, e.v);
	if (e.u == e.v || is_matched(e.u) || is_matched(e.v))
		throw error(error_code::internal_invariant_broken, "matching pairs must be vertex-disjoint");
	mate_[e.u] = e.v;
	mate_[e.v] = e.u;
}

void matching::remove(edge e) {
	if (contains(e)) {
		mate_.erase(e.u);
		mate_.erase(e.v);
	}
}

std::optional<vertex> matching::partner(vertex v) const {
	auto it = mate_.find(v);
	if (it == mate_.end())
		return std::nullopt;
	return it->second;
}

std::vector<edge> matching::edges() const {
	std::vector<edge> out;
	for (const auto &[v, w] : mate_)
		if (v < w)
			out.push_back({v, w});
	return out;
}

bool matching::contains(edge e) const {
	auto p = partner(e.u);
	return p && *p == e.v;
}

bool is_valid_matching(const graph &g, const matching &m) {
	for (const auto &e : m.edges())
		if (!g.has_edge(e.u, e.v))
			return false;
	return true;
}

namespace {

void check_sides(const graph &g, const vertex_set &side_a, const vertex_set &side_b) {
	for (vertex a : side_a) {
		if (a >= g.vertex_count())
			throw error(error_code::vertex_out_of_range, "side A vertex " + std::to_string(a));
		if (side_b.count(a))
			throw error(error_code::sides_overlap, "vertex " + std::to_string(a) + " on both sides");
	}
	for (vertex b : side_b)
		if (b >= g.vertex_count())
			throw error(error_code::vertex_out_of_range, "side B vertex " + std::to_string(b));
}

}  // namespace

matching maximum_bipartite_matching(const graph &g, const vertex_set &side_a, const vertex_set &side_b) {
	check_sides(g, side_a, side_b);
	const auto n = g.vertex_count();
	constexpr auto none = static_cast<vertex>(-1);
	std::vector<vertex> mate(n, none);
	std::vector<char> seen(n, 0);

	std::function<bool(vertex)> augment = [&](vertex a) {
		for (vertex b : g.neighbors(a)) {
			if (!side_b.count(b) || seen[b])
				continue;
			seen[b] = 1;
			if (mate[b] == none || augment(mate[b])) {
				mate[b] = a;
				mate[a] = b;
				return true;
			}
		}
		return false;
	};

	for (vertex a : side_a) {
		std::fill(seen.begin(), seen.end(), 0);
		augment(a);
	}

	matching m;
	for (vertex a : side_a)
		if (mate[a] != none)
			m.add({a, mate[a]});
	return m;
}

matching greedy_maximal_matching(const graph &g) {
	matching m;
	for (const auto &e : g.edges())
		if (!m.is_matched(e.u) && !m.is_matched(e.v))
			m.add(e);
	return m;
}

reachability alternating_reachability_from(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                           const matching &m, const vertex_set &start_b) {
	check_sides(g, side_a, side_b);
	reachability r;
	std::deque<vertex> queue(start_b.begin(), start_b.end());
	vertex_set visited_b = start_b;
	while (!queue.empty()) {
		vertex b = queue.front();
		queue.pop_front();
		for (vertex a : g.neighbors(b)) {
			if (!side_a.count(a) || m.contains(make_edge(a, b)) || r.a.count(a))
				continue;
			r.a.insert(a);
			auto next = m.partner(a);
			if (next && side_b.count(*next) && visited_b.insert(*next).second) {
				r.b.insert(*next);
				queue.push_back(*next);
			}
		}
	}
	return r;
}

reachability alternating_reachability(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                      const matching &m, alternating_start from) {
	if (from == alternating_start::unmatched_b) {
		vertex_set start;
		for (vertex b : side_b)
			if (!m.is_matched(b))
				start.insert(b);
		return alternating_reachability_from(g, side_a, side_b, m, start);
	}
	vertex_set start;
	for (vertex a : side_a)
		if (!m.is_matched(a))
			start.insert(a);
	// Swap roles: walk from unmatched A through B.
	auto swapped = alternating_reachability_from(g, side_b, side_a, m, start);
	return {std::move(swapped.b), std::move(swapped.a)};
}

std::optional<matching> rematch_to_expose(const graph &g, const vertex_set &side_a, const vertex_set &side_b,
                                          const matching &m, vertex target, std::optional<vertex> forbidden) {
	check_sides(g, side_a, side_b);
	auto root = m.partner(target);
	if (!side_b.count(target) || !root)
		throw error(error_code::target_unmatched, "vertex " + std::to_string(target) + " is not a matched B-vertex");

	std::map<vertex, vertex> parent_of_b;  // b -> a it was reached from
	std::map<vertex, vertex> parent_of_a;  // a -> b whose matching edge led to it
	std::deque<vertex> queue{*root};
	parent_of_a[*root] = target;
	std::optional<vertex> end;
	while (!queue.empty() && !end) {
		vertex a = queue.front();
		queue.pop_front();
		for (vertex b : g.neighbors(a)) {
			if (!side_b.count(b) || b == target || parent_of_b.count(b) || m.contains(make_edge(a, b)))
				continue;
			if (!m.is_matched(b)) {
				if (forbidden && b == *forbidden)
					continue;
				parent_of_b[b] = a;
				end = b;
				break;
			}
			parent_of_b[b] = a;
			vertex next = *m.partner(b);
			if (!parent_of_a.count(next)) {
				parent_of_a[next] = b;
				queue.push_back(next);
			}
		}
	}
	if (!end)
		return std::nullopt;

	matching out = m;
	vertex b = *end;
	while (true) {
		vertex a = parent_of_b.at(b);
		vertex old_b = parent_of_a.at(a);
		out.remove(make_edge(a, old_b));
		out.add(make_edge(a, b));
		if (old_b == target)
			break;
		b = old_b;
	}
	return out;
}

}  // namespace reokern
