#include "doctest.h"

#include <random>

#include "graph_zoo.hpp"
#include "reokern/error.hpp"
#include "reokern/oracles.hpp"
#include "reokern/vc_kernels.hpp"

using namespace reokern;

namespace {

reopt_instance vc_instance(const graph &g, const vertex_set &cover, int k, vertex u, vertex v, int kp) {
	return {problem_kind::vertex_cover, g, k, vertex_solution(cover), edge_add{u, v}, kp};
}

error_code code_of(const std::function<void()> &f) {
	try {
		f();
	} catch (const error &e) {
		return e.code();
	}
	return error_code::parse_error;
}

}  // namespace

TEST_CASE("crown_reduce_vc examples") {
	crown_decomposition star{{1, 2, 3, 4}, {0}, {}, {}};
	star.m.add({0, 1});
	auto [sub, k] = crown_reduce_vc(graphs::star(4), 2, star);
	CHECK(sub.g.empty());
	CHECK(k == 1);

	crown_decomposition p4{{0}, {1}, {2, 3}, {}};
	p4.m.add({0, 1});
	auto [rest, k2] = crown_reduce_vc(graphs::path(4), 2, p4);
	CHECK(rest.g == graphs::path(2));
	CHECK(rest.to_parent == std::vector<vertex>{2, 3});
	CHECK(k2 == 1);

	crown_decomposition bad{{0, 3}, {1}, {2}, {}};
	bad.m.add({0, 1});
	CHECK(code_of([&] { crown_reduce_vc(graphs::path(4), 2, bad); }) == error_code::invalid_crown);
}

TEST_CASE("crown reduction preserves the vertex cover answer (random, n <= 10)") {
	std::mt19937_64 rng(51);
	int crowns = 0;
	for (int round = 0; round < 2000; ++round) {
		const std::size_t n = 2 + rng() % 9;
		// Alternate sparse graphs with random trees, which tend to have crowns.
		graph g = testing::random_graph_no_isolated(rng, n, 0.1 + 0.05 * (rng() % 6));
		if (round % 2) {
			std::vector<edge> es;
			for (vertex v = 1; v < n; ++v)
				es.push_back(make_edge(v, static_cast<vertex>(rng() % v)));
			g = graph(n, es);
		}
		for (int k = 0; 3 * k + 1 <= static_cast<int>(n); ++k) {
			auto r = crown_or_matching(g, k);
			auto *cd = std::get_if<crown_decomposition>(&r);
			if (!cd)
				continue;
			++crowns;
			auto [sub, kr] = crown_reduce_vc(g, k, *cd);
			const bool before = is_member(problem_kind::vertex_cover, g, k);
			const bool after = kr >= 0 && is_member(problem_kind::vertex_cover, sub.g, kr);
			CHECK(before == after);
		}
	}
	CHECK(crowns > 150);
}

TEST_CASE("vc_kernelize_3k examples") {
	CHECK(vc_kernelize_3k(graphs::star(9), 1) == kernel_result::yes());
	auto k4 = vc_kernelize_3k(graphs::complete(4), 2);
	REQUIRE(k4.is_reduced());
	CHECK(k4.as_reduced().g == graphs::complete(4));
	CHECK(k4.as_reduced().parameter == 2);
	CHECK(k4.size() <= 6);
	CHECK(!is_member(problem_kind::vertex_cover, graphs::complete(4), 2));
	auto three = disjoint_union(disjoint_union(graphs::path(2), graphs::path(2)), graphs::path(2));
	CHECK(vc_kernelize_3k(three, 1) == kernel_result::no());
}

TEST_CASE("build_reopt_partition examples") {
	// a=0, b=1, c=2, d=3
	auto p = build_reopt_partition(graphs::star(3), {0});
	CHECK(p.m.size() == 1);
	CHECK(p.m.contains({0, 1}));
	CHECK(p.b_unmatched == vertex_set{2, 3});
	CHECK(p.a1 == vertex_set{0});
	CHECK(p.b1 == vertex_set{1});
	CHECK(p.a2.empty());
	CHECK(p.a3.empty());

	auto perfect = build_reopt_partition(graph(4, {{0, 2}, {1, 3}}), {0, 1});
	CHECK(perfect.a3 == vertex_set{0, 1});
	CHECK(perfect.b3 == vertex_set{2, 3});
	CHECK(perfect.a1.empty());
	CHECK(perfect.b_unmatched.empty());

	// a1=0, a2=1, b1=2, b2=3, b3=4
	auto q = build_reopt_partition(graph(5, {{0, 2}, {0, 3}, {1, 4}}), {0, 1});
	CHECK(q.m.contains({0, 2}));
	CHECK(q.m.contains({1, 4}));
	CHECK(q.b_unmatched == vertex_set{3});
	CHECK(q.a1 == vertex_set{0});
	CHECK(q.b1 == vertex_set{2});
	CHECK(q.a3 == vertex_set{1});
	CHECK(q.b3 == vertex_set{4});

	CHECK(code_of([] { build_reopt_partition(graphs::path(3), {0}); }) == error_code::not_a_cover);
}

TEST_CASE("partition invariants and both crowns hold for every cover of small graphs") {
	for (std::size_t n = 1; n <= 6; ++n)
		for (const auto &g : testing::nonisomorphic_graphs(n)) {
			// Every vertex cover, not only minimum ones.
			for (std::uint32_t s = 0; s < (1u << n); ++s) {
				vertex_set a;
				for (vertex v = 0; v < n; ++v)
					if (s >> v & 1)
						a.insert(v);
				if (!is_vertex_cover(g, a))
					continue;
				auto p = build_reopt_partition(g, a);
				CHECK(validate_reopt_partition(g, p).empty());
				for (vertex x : p.a1)
					CHECK(!p.a2.count(x));
				auto c1 = p.cd1();
				auto c2 = p.cd2();
				if (!c1.crown.empty())
					CHECK(validate_crown(g, c1).empty());
				if (!c2.crown.empty())
					CHECK(validate_crown(g, c2).empty());
			}
		}
}

TEST_CASE("reopt 2k kernel: cover endpoint") {
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(graphs::path(4), {1, 2}, 2, 1, 3, 2));
	CHECK(out.result == kernel_result::yes());
	CHECK(out.trace.final_branch() == reopt_vc_branch::cover_endpoint);
	// k' below |A| falls back to the crown reduction.
	auto over = reopt_vc_kernelize_2k_traced(vc_instance(graphs::path(4), {1, 2}, 2, 0, 2, 1));
	CHECK(over.trace.final_branch() == reopt_vc_branch::cover_endpoint);
	CHECK(over.result.size() <= 4);
	CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, apply_modification(graphs::path(4), edge_add{0, 2}), 1,
	                                over.result));
}

TEST_CASE("reopt 2k kernel: Case 2 on the star") {
	// a=0; b,c,d = 1,2,3
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(graphs::star(3), {0}, 1, 2, 3, 1));
	CHECK(out.trace.final_branch() == reopt_vc_branch::case2);
	REQUIRE(out.trace.crown);
	CHECK(out.trace.crown->head == vertex_set{0, 2});
	CHECK(out.result == kernel_result::no());
	CHECK(solve_vertex_cover(apply_modification(graphs::star(3), edge_add{2, 3})).value == 2);
}

TEST_CASE("reopt 2k kernel: Case 3 example") {
	// a1=0, a2=1, b1=2, b2=3, b3=4
	graph g(5, {{0, 2}, {0, 3}, {1, 4}});
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, {0, 1}, 2, 3, 4, 2));
	CHECK(out.trace.final_branch() == reopt_vc_branch::case3);
	REQUIRE(out.result.is_reduced());
	const auto &r = out.result.as_reduced();
	CHECK(r.g.vertex_count() == 3);
	CHECK(r.parameter == 1);
	// Induced on {a2, b2, b3}: a2-b3-b2.
	CHECK(r.g == graph(3, {{0, 2}, {1, 2}}));
	CHECK(is_member(problem_kind::vertex_cover, r.g, r.parameter));
	auto gplus = apply_modification(g, edge_add{3, 4});
	auto opt = solve_vertex_cover(gplus);
	CHECK(opt.value == 2);
	CHECK(opt.witness.vertices == std::vector<vertex>{0, 4});
}

TEST_CASE("reopt 2k kernel: degenerate Case 5 on the 3-vertex path") {
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(graphs::path(3), {1}, 1, 0, 2, 1));
	CHECK(out.trace.final_branch() == reopt_vc_branch::case5_degenerate);
	REQUIRE(out.result.is_reduced());
	CHECK(out.result.as_reduced().g == graphs::cycle(3));
	CHECK(out.result.as_reduced().parameter == 1);
	CHECK(out.result.size() == 3);
	CHECK(out.trace.size_bound == 3);
	CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, graphs::cycle(3), 1, out.result));
}

TEST_CASE("reopt 2k kernel: Case 4 rematches into Case 3") {
	// A = {0, 1}, B = {2, 3, 4}, edges 0-2, 0-3, 1-4. Matching 0-2, 1-4 gives
	// B_unmatched = {3}, B1 = {2}, B3 = {4}. Add 2-4.
	graph g(5, {{0, 2}, {0, 3}, {1, 4}});
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, {0, 1}, 2, 2, 4, 2));
	REQUIRE(out.trace.branches.size() == 2);
	CHECK(out.trace.branches[0] == reopt_vc_branch::case4);
	CHECK(out.trace.branches[1] == reopt_vc_branch::case3);
	CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, apply_modification(g, edge_add{2, 4}), 2, out.result));
}

TEST_CASE("reopt 2k kernel: Case 1") {
	// Perfect matching 0-2, 1-3 plus 0-3: B3 = {2, 3}.
	graph g(4, {{0, 2}, {1, 3}, {0, 3}});
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, {0, 1}, 2, 2, 3, 2));
	CHECK(out.trace.final_branch() == reopt_vc_branch::case1);
	CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, apply_modification(g, edge_add{2, 3}), 2, out.result));
}

TEST_CASE("reopt 2k kernel: isolated endpoint") {
	graph g(4, {{0, 1}, {0, 2}});
	auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, {0}, 1, 1, 3, 1));
	CHECK(out.trace.final_branch() == reopt_vc_branch::isolated_endpoint);
	CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, apply_modification(g, edge_add{1, 3}), 1, out.result));
}

TEST_CASE("reopt 2k kernel errors") {
	CHECK(code_of([] {
		      reopt_vc_kernelize_2k(vc_instance(graphs::path(3), {0}, 1, 0, 2, 1));
	      }) == error_code::witness_not_a_cover);
	CHECK(code_of([] {
		      reopt_instance inst = vc_instance(graphs::path(3), {1}, 1, 0, 2, 1);
		      inst.modification = edge_del{0, 1};
		      reopt_vc_kernelize_2k(inst);
	      }) == error_code::modification_mismatch);
	CHECK(code_of([] { reopt_vc_kernelize_2k(vc_instance(graphs::path(3), {1}, 1, 0, 1, 1)); }) ==
	      error_code::modification_invalid);
	CHECK(code_of([] { reopt_vc_kernelize_2k(vc_instance(graphs::path(3), {0, 2}, 1, 0, 2, 1)); }) ==
	      error_code::witness_not_a_cover);
}

TEST_CASE("reopt 2k kernel is exact on all graphs with at most 6 vertices") {
	for (std::size_t n = 2; n <= 6; ++n)
		for (const auto &g : testing::nonisomorphic_graphs(n))
			for (const auto &a : all_minimum_vertex_covers(g))
				for (const auto &e : testing::absent_edges(g)) {
					const int k = static_cast<int>(a.size());
					for (int kp : {k, k - 1, k + 1}) {
						if (kp < 0)
							continue;
						auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, a, k, e.u, e.v, kp));
						auto gplus = apply_modification(g, edge_add{e.u, e.v});
						CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, gplus, kp, out.result));
						CHECK(out.result.size() <= out.trace.size_bound);
						if (out.trace.crown)
							CHECK(validate_crown(out.trace.working, *out.trace.crown).empty());
					}
				}
}

TEST_CASE("reopt 2k kernel with non-minimum witnesses") {
	std::mt19937_64 rng(52);
	for (int round = 0; round < 400; ++round) {
		const std::size_t n = 3 + rng() % 8;
		auto g = testing::random_graph(rng, n, 0.3);
		auto absent = testing::absent_edges(g);
		if (absent.empty())
			continue;
		// Greedy cover from both endpoints of a maximal matching.
		vertex_set a;
		for (const auto &e : greedy_maximal_matching(g).edges()) {
			a.insert(e.u);
			a.insert(e.v);
		}
		const int k = static_cast<int>(a.size()) + static_cast<int>(rng() % 2);
		const auto e = absent[rng() % absent.size()];
		const int kp = static_cast<int>(rng() % (k + 1));
		auto out = reopt_vc_kernelize_2k_traced(vc_instance(g, a, k, e.u, e.v, kp));
		CHECK(verify_kernel_equivalence(problem_kind::vertex_cover, apply_modification(g, edge_add{e.u, e.v}), kp,
		                                out.result));
		CHECK(out.result.size() <= out.trace.size_bound);
	}
}
