#include "reokern/crown.hpp"

#include <algorithm>

#include "reokern/error.hpp"

namespace reokern {

std::string_view to_string(crown_violation_kind kind) {
	switch (kind) {
	case crown_violation_kind::crown_empty: return "C empty";
	case crown_violation_kind::crown_not_independent: return "C not independent";
	case crown_violation_kind::edge_between_crown_and_rest: return "edge between C and R";
	case crown_violation_kind::not_a_partition: return "C, H, R not a partition of V";
	case crown_violation_kind::matching_not_crown_head: return "matching edge outside C x H";
	case crown_violation_kind::head_not_saturated: return "matching does not saturate H";
	}
	return "unknown";
}

namespace {

std::string pair_text(vertex a, vertex b) {
	return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

std::vector<crown_violation> validate_crown(const graph &g, const crown_decomposition &cd) {
	std::vector<crown_violation> out;
	const auto n = g.vertex_count();

	if (cd.crown.empty())
		out.push_back({crown_violation_kind::crown_empty, ""});

	std::vector<int> part(n, -1);
	int index = 0;
	for (const auto *s : {&cd.crown, &cd.head, &cd.rest}) {
		for (vertex v : *s) {
			if (v >= n) {
				out.push_back({crown_violation_kind::not_a_partition, "vertex " + std::to_string(v) + " out of range"});
			} else if (part[v] != -1) {
				out.push_back({crown_violation_kind::not_a_partition, "vertex " + std::to_string(v) + " in two parts"});
			} else {
				part[v] = index;
			}
		}
		++index;
	}
	for (vertex v = 0; v < n; ++v)
		if (part[v] == -1) {
			out.push_back({crown_violation_kind::not_a_partition, "vertex " + std::to_string(v) + " uncovered"});
		}

	for (const auto &e : g.edges()) {
		const int pu = part[e.u];
		const int pv = part[e.v];
		if (pu == 0 && pv == 0)
			out.push_back({crown_violation_kind::crown_not_independent, pair_text(e.u, e.v)});
		else if ((pu == 0 && pv == 2) || (pu == 2 && pv == 0))
			out.push_back({crown_violation_kind::edge_between_crown_and_rest, pair_text(e.u, e.v)});
	}

	for (const auto &e : cd.m.edges()) {
		const bool host = g.has_edge(e.u, e.v);
		const bool ch = (cd.crown.count(e.u) && cd.head.count(e.v)) || (cd.crown.count(e.v) && cd.head.count(e.u));
		if (!host || !ch)
			out.push_back({crown_violation_kind::matching_not_crown_head, pair_text(e.u, e.v)});
	}
	for (vertex h : cd.head)
		if (!cd.m.is_matched(h))
			out.push_back({crown_violation_kind::head_not_saturated, "head vertex " + std::to_string(h) + " unmatched"});
	if (cd.m.size() != cd.head.size() &&
	    std::none_of(out.begin(), out.end(),
	                 [](const auto &v) { return v.kind == crown_violation_kind::head_not_saturated; }))
		out.push_back({crown_violation_kind::head_not_saturated, "|M| != |H|"});
	return out;
}

crown_or_matching_result crown_or_matching(const graph &g, int k) {
	const auto n = g.vertex_count();
	if (k < 0)
		throw error(error_code::precondition_violated, "negative parameter");
	for (vertex v = 0; v < n; ++v)
		if (g.degree(v) == 0)
			throw error(error_code::precondition_violated, "isolated vertex " + std::to_string(v));
	if (n < 3 * static_cast<std::size_t>(k) + 1)
		throw error(error_code::precondition_violated, "fewer than 3k+1 vertices");

	const auto need = static_cast<std::size_t>(k) + 1;
	auto first_edges = [need](const matching &m) {
		matching out;
		auto e = m.edges();
		for (std::size_t i = 0; i < need; ++i)
			out.add(e[i]);
		return big_matching{out};
	};

	const matching m1 = greedy_maximal_matching(g);
	if (m1.size() >= need)
		return first_edges(m1);

	vertex_set cover;  // V(M1)
	for (const auto &e : m1.edges()) {
		cover.insert(e.u);
		cover.insert(e.v);
	}
	vertex_set independent;
	for (vertex v = 0; v < n; ++v)
		if (!cover.count(v))
			independent.insert(v);

	const matching m2 = maximum_bipartite_matching(g, cover, independent);
	if (m2.size() >= need)
		return first_edges(m2);

	vertex_set unmatched;
	for (vertex v : independent)
		if (!m2.is_matched(v))
			unmatched.insert(v);
	if (unmatched.empty())
		throw error(error_code::internal_invariant_broken, "no unmatched vertex on the independent side");

	const auto reach = alternating_reachability_from(g, cover, independent, m2, unmatched);

	crown_decomposition cd;
	cd.crown = unmatched;
	cd.crown.insert(reach.b.begin(), reach.b.end());
	cd.head = reach.a;
	for (vertex h : cd.head) {
		auto p = m2.partner(h);
		if (!p || !cd.crown.count(*p))
			throw error(error_code::internal_invariant_broken, "head vertex without crown partner");
		cd.m.add(make_edge(h, *p));
	}
	// Leftover vertices whose whole neighbourhood lies in the head can join
	// the crown: they are pairwise non-adjacent and touch neither C nor R.
	for (vertex v = 0; v < n; ++v) {
		if (cd.crown.count(v) || cd.head.count(v))
			continue;
		auto nb = g.neighbors(v);
		if (std::all_of(nb.begin(), nb.end(), [&](vertex w) { return cd.head.count(w) != 0; }))
			cd.crown.insert(v);
	}
	for (vertex v = 0; v < n; ++v)
		if (!cd.crown.count(v) && !cd.head.count(v))
			cd.rest.insert(v);
	return cd;
}

}  // namespace reokern
