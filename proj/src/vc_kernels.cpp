#include "reokern/vc_kernels.hpp"

#include <algorithm>

#include "reokern/error.hpp"

namespace reokern {

std::pair<subgraph, int> crown_reduce_vc(const graph &g, int k, const crown_decomposition &cd) {
	auto violations = validate_crown(g, cd);
	if (!violations.empty())
		throw error(error_code::invalid_crown,
		            std::string(to_string(violations.front().kind)) + " " + violations.front().detail);
	return {induced_subgraph(g, cd.rest), k - static_cast<int>(cd.head.size())};
}

kernel_result vc_kernelize_3k(const graph &g, int k) {
	graph work = g;
	int param = k;
	const auto bound = 3 * static_cast<std::size_t>(std::max(k, 0));
	while (true) {
		if (param < 0)
			return kernel_result::no();
		work = strip_isolated(work).g;
		if (work.empty())
			return kernel_result::yes();
		if (work.vertex_count() <= 3 * static_cast<std::size_t>(param))
			return kernel_result::reduce(work, param, bound);
		auto step = crown_or_matching(work, param);
		if (std::holds_alternative<big_matching>(step))
			return kernel_result::no();
		auto [rest, next] = crown_reduce_vc(work, param, std::get<crown_decomposition>(step));
		work = std::move(rest.g);
		param = next;
	}
}

namespace {

vertex_set unite(std::initializer_list<const vertex_set *> parts) {
	vertex_set out;
	for (const auto *p : parts)
		out.insert(p->begin(), p->end());
	return out;
}

matching restrict_to_head(const matching &m, const vertex_set &head) {
	matching out;
	for (const auto &e : m.edges())
		if (head.count(e.u) || head.count(e.v))
			out.add(e);
	return out;
}

}  // namespace

crown_decomposition reopt_partition::cd1() const {
	crown_decomposition cd;
	cd.crown = unite({&b_unmatched, &b1, &b3});
	cd.head = unite({&a1, &a3});
	cd.rest = unite({&a_unmatched, &a2, &b2});
	cd.m = restrict_to_head(m, cd.head);
	return cd;
}

crown_decomposition reopt_partition::cd2() const {
	crown_decomposition cd;
	cd.crown = unite({&b_unmatched, &b1});
	cd.head = a1;
	cd.rest = unite({&a_unmatched, &a2, &b2, &a3, &b3});
	cd.m = restrict_to_head(m, cd.head);
	return cd;
}

reopt_partition build_reopt_partition_with(const graph &g, const vertex_set &cover, const matching &m) {
	const auto n = g.vertex_count();
	for (vertex v : cover)
		if (v >= n)
			throw error(error_code::vertex_out_of_range, "cover vertex " + std::to_string(v));
	for (const auto &e : g.edges())
		if (!cover.count(e.u) && !cover.count(e.v))
			throw error(error_code::not_a_cover,
			            "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} uncovered");

	reopt_partition p;
	p.a = cover;
	for (vertex v = 0; v < n; ++v)
		if (!cover.count(v))
			p.b.insert(v);
	p.m = m;
	for (vertex v : p.a)
		if (!m.is_matched(v))
			p.a_unmatched.insert(v);
	for (vertex v : p.b)
		if (!m.is_matched(v))
			p.b_unmatched.insert(v);

	const auto from_b = alternating_reachability(g, p.a, p.b, m, alternating_start::unmatched_b);
	const auto from_a = alternating_reachability(g, p.a, p.b, m, alternating_start::unmatched_a);
	p.a1 = from_b.a;
	p.b1 = from_b.b;
	p.b2 = from_a.b;
	p.a2 = from_a.a;
	for (vertex v : p.a)
		if (m.is_matched(v) && !p.a1.count(v) && !p.a2.count(v))
			p.a3.insert(v);
	for (vertex v : p.b)
		if (m.is_matched(v) && !p.b1.count(v) && !p.b2.count(v))
			p.b3.insert(v);
	return p;
}

reopt_partition build_reopt_partition(const graph &g, const vertex_set &cover) {
	vertex_set other;
	for (vertex v = 0; v < g.vertex_count(); ++v)
		if (!cover.count(v))
			other.insert(v);
	// Validate before matching so a bad cover reports NotACover.
	for (const auto &e : g.edges())
		if (!cover.count(e.u) && !cover.count(e.v))
			throw error(error_code::not_a_cover,
			            "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} uncovered");
	return build_reopt_partition_with(g, cover, maximum_bipartite_matching(g, cover, other));
}

std::vector<std::string> validate_reopt_partition(const graph &g, const reopt_partition &p) {
	std::vector<std::string> out;
	const auto n = g.vertex_count();
	for (vertex v = 0; v < n; ++v)
		if (p.a.count(v) == p.b.count(v))
			out.push_back("vertex " + std::to_string(v) + " not in exactly one of A, B");
	for (const auto &e : g.edges())
		if (p.b.count(e.u) && p.b.count(e.v))
			out.push_back("B not independent");
	auto check_partition = [&](const vertex_set &whole, std::initializer_list<const vertex_set *> parts,
	                           const char *name) {
		std::size_t total = 0;
		vertex_set seen;
		for (const auto *s : parts) {
			total += s->size();
			seen.insert(s->begin(), s->end());
		}
		if (total != whole.size() || seen != whole)
			out.push_back(std::string(name) + " subsets do not partition it");
	};
	check_partition(p.a, {&p.a_unmatched, &p.a1, &p.a2, &p.a3}, "A");
	check_partition(p.b, {&p.b_unmatched, &p.b1, &p.b2, &p.b3}, "B");
	for (const auto &[as, bs, i] : {std::tuple{&p.a1, &p.b1, 1}, std::tuple{&p.a2, &p.b2, 2},
	                                std::tuple{&p.a3, &p.b3, 3}}) {
		if (as->size() != bs->size())
			out.push_back("|A" + std::to_string(i) + "| != |B" + std::to_string(i) + "|");
		for (vertex a : *as) {
			auto partner = p.m.partner(a);
			if (!partner || !bs->count(*partner))
				out.push_back("A" + std::to_string(i) + " vertex " + std::to_string(a) + " not matched into B" +
				              std::to_string(i));
		}
	}
	for (const auto &e : p.m.edges())
		if (!g.has_edge(e.u, e.v) || p.a.count(e.u) == p.a.count(e.v))
			out.push_back("matching edge outside A x B");
	return out;
}

std::string_view to_string(reopt_vc_branch b) {
	switch (b) {
	case reopt_vc_branch::cover_endpoint: return "cover-endpoint";
	case reopt_vc_branch::isolated_endpoint: return "isolated-endpoint";
	case reopt_vc_branch::case1: return "Case 1";
	case reopt_vc_branch::case2: return "Case 2";
	case reopt_vc_branch::case3: return "Case 3";
	case reopt_vc_branch::case4: return "Case 4";
	case reopt_vc_branch::case5: return "Case 5";
	case reopt_vc_branch::case5_degenerate: return "Case 5 (degenerate)";
	}
	return "unknown";
}

namespace {

[[noreturn]] void broken(const std::string &what) { throw error(error_code::internal_invariant_broken, what); }

vertex_set map_into(const subgraph &s, const vertex_set &parent_set) {
	vertex_set out;
	for (vertex v : parent_set)
		if (auto w = s.from_parent(v))
			out.insert(*w);
	return out;
}

// Crown-reduce `work` when the crown is non-empty, then decide or emit.
kernel_result finish(const graph &work, std::optional<crown_decomposition> cd, int param, reopt_vc_trace &trace) {
	subgraph residual{work, {}};
	residual.to_parent.resize(work.vertex_count());
	for (vertex v = 0; v < work.vertex_count(); ++v)
		residual.to_parent[v] = v;
	if (cd && !cd->crown.empty()) {
		auto violations = validate_crown(work, *cd);
		if (!violations.empty())
			broken("crown for " + std::string(to_string(trace.final_branch())) + " invalid: " +
			       std::string(to_string(violations.front().kind)) + " " + violations.front().detail);
		auto [sub, p] = crown_reduce_vc(work, param, *cd);
		residual = std::move(sub);
		param = p;
		trace.crown = std::move(cd);
	}
	if (param < 0)
		return kernel_result::no();
	auto stripped = strip_isolated(residual.g);
	if (stripped.g.empty())
		return kernel_result::yes();
	if (stripped.g.vertex_count() > trace.size_bound)
		broken("residual of " + std::to_string(stripped.g.vertex_count()) + " vertices exceeds bound " +
		       std::to_string(trace.size_bound));
	return kernel_result::reduce(std::move(stripped.g), param, trace.size_bound);
}

enum class side_class { unmatched, one, two_or_three, in_cover };

side_class classify(const reopt_partition &p, vertex v) {
	if (p.b_unmatched.count(v))
		return side_class::unmatched;
	if (p.b1.count(v))
		return side_class::one;
	if (p.b2.count(v) || p.b3.count(v))
		return side_class::two_or_three;
	return side_class::in_cover;
}

// The case analysis on G_s (isolated vertices of G removed) with the new
// edge {u, v} between two B-vertices; crowns are checked on G_s + e.
kernel_result dispatch_cases(const graph &gs, const graph &gs_plus, const vertex_set &cover, vertex u, vertex v,
                             int param, reopt_vc_trace &trace) {
	reopt_partition p = build_reopt_partition(gs, cover);
	const auto n = gs.vertex_count();
	const auto k = cover.size();
	trace.size_bound = 2 * k;

	auto c2 = p.cd2();
	if (!p.b_unmatched.empty()) {
		if (c2.crown.size() + 2 * k < n + 1)
			broken("|C2| < n - 2k + 1");
		if (c2.rest.size() + 2 > 2 * k)
			broken("|R2| > 2k - 2");
	}

	std::optional<reopt_vc_branch> expected;
	for (int round = 0; round < 4; ++round) {
		auto cu = classify(p, u);
		auto cv = classify(p, v);
		if (cu == side_class::in_cover || cv == side_class::in_cover)
			broken("endpoint of the new edge lies in the cover");
		// Orient so that the lower-numbered class sits on u where a case
		// distinguishes the ends.
		auto swap_ends = [&] {
			std::swap(u, v);
			std::swap(cu, cv);
		};
		reopt_vc_branch which;
		if (cu == side_class::two_or_three && cv == side_class::two_or_three) {
			which = reopt_vc_branch::case1;
		} else if (cu == side_class::unmatched && cv == side_class::unmatched) {
			which = reopt_vc_branch::case2;
		} else if ((cu == side_class::unmatched && cv == side_class::two_or_three) ||
		           (cv == side_class::unmatched && cu == side_class::two_or_three)) {
			if (cu != side_class::unmatched)
				swap_ends();
			which = reopt_vc_branch::case3;
		} else if ((cu == side_class::one && cv == side_class::two_or_three) ||
		           (cv == side_class::one && cu == side_class::two_or_three)) {
			if (cu != side_class::one)
				swap_ends();
			which = reopt_vc_branch::case4;
		} else {
			if (cu != side_class::one)
				swap_ends();
			which = reopt_vc_branch::case5;
		}
		if (expected && which != *expected &&
		    !(*expected == reopt_vc_branch::case5 && which == reopt_vc_branch::case2))
			broken("rematch led to " + std::string(to_string(which)) + " instead of " +
			       std::string(to_string(*expected)));
		trace.branches.push_back(which);

		switch (which) {
		case reopt_vc_branch::case1:
			return finish(gs_plus, p.cd2(), param, trace);
		case reopt_vc_branch::case2: {
			auto cd = p.cd1();
			cd.crown.erase(u);
			cd.head.insert(u);
			cd.m.add(make_edge(u, v));
			return finish(gs_plus, cd, param, trace);
		}
		case reopt_vc_branch::case3: {
			auto cd = p.cd2();
			cd.crown.erase(u);
			cd.rest.insert(u);
			return finish(gs_plus, cd, param, trace);
		}
		case reopt_vc_branch::case4: {
			auto m = rematch_to_expose(gs, p.a, p.b, p.m, u);
			if (!m)
				broken("B1 vertex cannot be exposed");
			p = build_reopt_partition_with(gs, cover, *m);
			expected = reopt_vc_branch::case3;
			continue;
		}
		case reopt_vc_branch::case5:
		default: {
			if (cv == side_class::one) {
				auto m = rematch_to_expose(gs, p.a, p.b, p.m, v);
				if (!m)
					broken("B1 vertex cannot be exposed");
				p = build_reopt_partition_with(gs, cover, *m);
				expected = reopt_vc_branch::case5;
				continue;
			}
			if (auto m = rematch_to_expose(gs, p.a, p.b, p.m, u, v)) {
				p = build_reopt_partition_with(gs, cover, *m);
				expected = reopt_vc_branch::case2;
				continue;
			}
			trace.branches.back() = reopt_vc_branch::case5_degenerate;
			trace.size_bound = 2 * k + 1;
			vertex_set others = p.b_unmatched;
			others.erase(v);
			auto reach = alternating_reachability_from(gs, p.a, p.b, p.m, others);
			vertex_set a_v, b_v;
			for (vertex a : p.a1)
				if (!reach.a.count(a)) {
					a_v.insert(a);
					b_v.insert(*p.m.partner(a));
				}
			auto cd = p.cd2();
			for (vertex a : a_v) {
				cd.head.erase(a);
				cd.rest.insert(a);
			}
			for (vertex b : b_v) {
				cd.crown.erase(b);
				cd.rest.insert(b);
			}
			cd.crown.erase(v);
			cd.rest.insert(v);
			cd.m = restrict_to_head(p.m, cd.head);
			return finish(gs_plus, cd, param, trace);
		}
		}
	}
	broken("case analysis did not terminate");
}

}  // namespace

reopt_vc_outcome reopt_vc_kernelize_2k_traced(const reopt_instance &inst) {
	if (inst.problem != problem_kind::vertex_cover)
		throw error(error_code::unsupported_problem, "edge-addition 2k kernel needs vertex_cover");
	const auto *add = std::get_if<edge_add>(&inst.modification);
	if (!add)
		throw error(error_code::modification_mismatch,
		            "edge-addition 2k kernel got " + std::string(modification_name(inst.modification)));
	const graph &g = inst.original;
	check_modification(g, inst.modification);
	if (!inst.witness)
		throw error(error_code::witness_not_a_cover, "no witness given");
	const auto n = g.vertex_count();
	vertex_set cover;
	for (vertex w : inst.witness->vertices) {
		if (w >= n)
			throw error(error_code::witness_not_a_cover, "witness vertex " + std::to_string(w) + " out of range");
		cover.insert(w);
	}
	for (const auto &e : g.edges())
		if (!cover.count(e.u) && !cover.count(e.v))
			throw error(error_code::witness_not_a_cover,
			            "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} uncovered");
	if (static_cast<int>(cover.size()) > inst.k)
		throw error(error_code::witness_not_a_cover, "witness larger than k");

	const vertex u = add->u, v = add->v;
	const graph gplus = apply_modification(g, inst.modification);
	const int kp = inst.modified_k;
	const auto a_size = cover.size();

	reopt_vc_outcome out;
	auto &trace = out.trace;
	auto identity = [](std::size_t count) {
		std::vector<vertex> id(count);
		for (std::size_t i = 0; i < count; ++i)
			id[i] = static_cast<vertex>(i);
		return id;
	};

	if (cover.count(u) || cover.count(v)) {
		trace.branches.push_back(reopt_vc_branch::cover_endpoint);
		trace.working = gplus;
		trace.to_modified = identity(n);
		trace.size_bound = 2 * a_size;
		if (static_cast<int>(a_size) <= kp) {
			out.result = kernel_result::yes();
			return out;
		}
		auto p = build_reopt_partition(gplus, cover);
		out.result = finish(gplus, p.cd2(), kp, trace);
		return out;
	}

	if (g.degree(u) == 0 || g.degree(v) == 0) {
		trace.branches.push_back(reopt_vc_branch::isolated_endpoint);
		const vertex support = g.degree(u) == 0 ? v : u;
		// Drop the support, then everything isolated in what remains.
		std::vector<vertex> keep;
		for (vertex w = 0; w < n; ++w) {
			if (w == support)
				continue;
			bool has_other = false;
			for (vertex x : gplus.neighbors(w))
				if (x != support) {
					has_other = true;
					break;
				}
			if (has_other)
				keep.push_back(w);
		}
		auto sub = induced_subgraph(gplus, keep);
		const auto sub_cover = map_into(sub, cover);
		trace.working = sub.g;
		trace.to_modified = sub.to_parent;
		trace.size_bound = 2 * a_size;
		auto p = build_reopt_partition(sub.g, sub_cover);
		out.result = finish(sub.g, p.cd2(), kp - 1, trace);
		return out;
	}

	std::vector<vertex> keep;
	for (vertex w = 0; w < n; ++w)
		if (g.degree(w) > 0)
			keep.push_back(w);
	auto gs = induced_subgraph(g, keep);
	auto gs_plus = induced_subgraph(gplus, keep);
	trace.working = gs_plus.g;
	trace.to_modified = gs_plus.to_parent;
	out.result = dispatch_cases(gs.g, gs_plus.g, map_into(gs, cover), *gs.from_parent(u), *gs.from_parent(v), kp,
	                            trace);
	return out;
}

kernel_result reopt_vc_kernelize_2k(const reopt_instance &inst) { return reopt_vc_kernelize_2k_traced(inst).result; }

}  // namespace reokern
