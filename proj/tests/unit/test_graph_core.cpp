#include "doctest.h"

#include <random>

#include "graph_zoo.hpp"
#include "reokern/error.hpp"
#include "reokern/graph.hpp"

using namespace reokern;

namespace {

error_code code_of(const std::function<void()> &f) {
	try {
		f();
	} catch (const error &e) {
		return e.code();
	}
	FAIL("expected an error");
	return error_code::parse_error;
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
	CHECK(code_of([] { graph(3, {{0, 0}}); }) == error_code::invalid_graph);
	CHECK(code_of([] { graph(3, {{0, 1}, {1, 0}}); }) == error_code::invalid_graph);
	CHECK(code_of([] { graph(3, {{0, 3}}); }) == error_code::invalid_graph);
	CHECK(code_of([] { graph(2, {}, {"a"}); }) == error_code::invalid_graph);
	graph g(3, {{2, 1}, {0, 1}});
	CHECK(g.edges() == std::vector<edge>{{0, 1}, {1, 2}});
	CHECK(g.has_edge(2, 1));
	CHECK(!g.has_edge(0, 2));
}

TEST_CASE("apply_modification basics") {
	const graph p3 = graphs::path(3);
	CHECK(apply_modification(p3, edge_add{0, 2}) == graphs::cycle(3));
	const graph two = apply_modification(graphs::cycle(3), vertex_del{0});
	CHECK(two.vertex_count() == 2);
	CHECK(two.edge_count() == 1);
	CHECK(code_of([&] { apply_modification(p3, edge_add{0, 1}); }) == error_code::modification_invalid);
	CHECK(code_of([&] { apply_modification(p3, edge_del{0, 2}); }) == error_code::modification_invalid);
	CHECK(code_of([&] { apply_modification(p3, vertex_del{3}); }) == error_code::modification_invalid);
	CHECK(code_of([&] { apply_modification(p3, vertex_add{{5}}); }) == error_code::modification_invalid);
	CHECK(code_of([&] { apply_modification(p3, edge_add{1, 1}); }) == error_code::modification_invalid);

	const graph added = apply_modification(p3, vertex_add{{0, 2}});
	CHECK(added.vertex_count() == 4);
	CHECK(added.has_edge(3, 0));
	CHECK(added.has_edge(3, 2));
}

TEST_CASE("vertex deletion re-indexes and keeps labels") {
	graph g(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
	graph h = apply_modification(g, vertex_del{1});
	CHECK(h.vertex_count() == 2);
	CHECK(h.edge_count() == 0);
	CHECK(h.label(0) == "a");
	CHECK(h.label(1) == "c");
	CHECK(h.find_label("c") == vertex{1});
}

TEST_CASE("components and component_of") {
	const graph g = disjoint_union(graphs::path(3), graphs::path(2));
	auto comps = components(g);
	REQUIRE(comps.size() == 2);
	CHECK(comps[0].size() == 3);
	CHECK(comps[1].size() == 2);
	auto sub = component_of(g, vertex{4});
	CHECK(sub.g == graphs::path(2));
	CHECK(sub.to_parent == std::vector<vertex>{3, 4});
	CHECK(components(graphs::cycle(5)).size() == 1);
	CHECK(code_of([&] { component_of(g, vertex{9}); }) == error_code::vertex_out_of_range);
	auto by_edge = component_of(g, edge{0, 1});
	CHECK(by_edge.g.vertex_count() == 3);
}

TEST_CASE("disjoint_union examples") {
	auto two = disjoint_union(graphs::path(2), graphs::path(2));
	CHECK(two.vertex_count() == 4);
	CHECK(two.edge_count() == 2);
	CHECK(components(two).size() == 2);
	CHECK(disjoint_union(graph(0), graphs::cycle(4)) == graphs::cycle(4));
	auto k33 = disjoint_union(graphs::complete(3), graphs::complete(3));
	CHECK(k33.vertex_count() == 6);
	CHECK(k33.edge_count() == 6);

	graph labeled(1, {}, {"x"});
	auto mixed = disjoint_union(labeled, graphs::path(2));
	CHECK(mixed.labels() == std::vector<std::string>{"x", "", ""});
}

TEST_CASE("edge add then delete round-trips") {
	std::mt19937_64 rng(11);
	for (int round = 0; round < 200; ++round) {
		auto g = testing::random_graph(rng, 2 + round % 8, 0.4);
		for (const auto &e : testing::absent_edges(g)) {
			auto h = apply_modification(apply_modification(g, edge_add{e.u, e.v}), edge_del{e.u, e.v});
			CHECK(h == g);
		}
	}
}

TEST_CASE("components form a partition with no cross edges") {
	std::mt19937_64 rng(12);
	for (int round = 0; round < 300; ++round) {
		auto g = testing::random_graph(rng, 1 + round % 12, 0.15);
		auto comps = components(g);
		auto ids = component_ids(g);
		std::size_t total = 0;
		for (std::size_t c = 0; c < comps.size(); ++c) {
			total += comps[c].size();
			CHECK(is_connected(induced_subgraph(g, comps[c]).g));
			for (vertex v : comps[c])
				CHECK(ids[v] == c);
		}
		CHECK(total == g.vertex_count());
		for (const auto &e : g.edges())
			CHECK(ids[e.u] == ids[e.v]);
	}
}

TEST_CASE("disjoint union commutes with components") {
	std::mt19937_64 rng(13);
	for (int round = 0; round < 100; ++round) {
		auto g1 = testing::random_graph(rng, round % 7, 0.3);
		auto g2 = testing::random_graph(rng, (round / 7) % 6, 0.3);
		auto u = disjoint_union(g1, g2);
		auto expected = components(g1);
		for (auto c : components(g2)) {
			for (auto &v : c)
				v += static_cast<vertex>(g1.vertex_count());
			expected.push_back(c);
		}
		CHECK(components(u) == expected);
	}
}

TEST_CASE("isomorphism class counts") {
	const std::size_t known[] = {1, 1, 2, 4, 11, 34, 156, 1044};
	for (std::size_t n = 0; n < 8; ++n)
		CHECK(testing::nonisomorphic_graphs(n).size() == known[n]);
}

TEST_CASE("digraph basics") {
	digraph d(3, {{0, 1}, {0, 2}});
	CHECK(d.has_arc(0, 1));
	CHECK(!d.has_arc(1, 0));
	CHECK(d.out_neighbors(0).size() == 2);
	CHECK(code_of([] { digraph(2, {{1, 1}}); }) == error_code::invalid_graph);
}
