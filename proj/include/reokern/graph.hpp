#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace reokern {

using vertex = std::uint32_t;
using vertex_set = std::set<vertex>;

// Unordered pair, stored with u < v.
struct edge {
	vertex u = 0;
	vertex v = 0;

	auto operator<=>(const edge &) const = default;
};

edge make_edge(vertex a, vertex b);

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class graph {
public:
	graph() = default;
	explicit graph(std::size_t n) : adj_(n) {}
	// Throws error(invalid_graph) on self-loops, duplicates, out-of-range
	// endpoints or a label vector whose size differs from n.
	graph(std::size_t n, std::vector<edge> edges, std::vector<std::string> labels = {});

	std::size_t vertex_count() const noexcept { return adj_.size(); }
	std::size_t edge_count() const noexcept { return edges_.size(); }
	bool empty() const noexcept { return adj_.empty(); }

	// Sorted ascending.
	const std::vector<edge> &edges() const noexcept { return edges_; }
	std::span<const vertex> neighbors(vertex v) const { return adj_.at(v); }
	std::size_t degree(vertex v) const { return adj_.at(v).size(); }
	bool has_edge(vertex a, vertex b) const;
	bool has_vertex(vertex v) const noexcept { return v < adj_.size(); }

	bool has_labels() const noexcept { return !labels_.empty(); }
	const std::vector<std::string> &labels() const noexcept { return labels_; }
	const std::string &label(vertex v) const { return labels_.at(v); }
	std::optional<vertex> find_label(std::string_view name) const;

	bool operator==(const graph &other) const {
		return adj_.size() == other.adj_.size() && edges_ == other.edges_ && labels_ == other.labels_;
	}

private:
	std::vector<edge> edges_;
	std::vector<std::vector<vertex>> adj_;
	std::vector<std::string> labels_;
};

class graph_builder {
public:
	explicit graph_builder(std::size_t n = 0) : n_(n) {}

	vertex add_vertex(std::string label = {});
	graph_builder &add_edge(vertex a, vertex b);
	graph_builder &set_label(vertex v, std::string label);
	std::size_t vertex_count() const noexcept { return n_; }
	graph build() const;

private:
	std::size_t n_;
	std::vector<edge> edges_;
	std::vector<std::string> labels_;
};

namespace graphs {
graph empty(std::size_t n);
graph path(std::size_t n);
graph cycle(std::size_t n);
graph complete(std::size_t n);
graph star(std::size_t leaves);
graph complete_bipartite(std::size_t a, std::size_t b);
}  // namespace graphs

class digraph {
public:
	struct arc {
		vertex from = 0;
		vertex to = 0;
		auto operator<=>(const arc &) const = default;
	};

	digraph() = default;
	digraph(std::size_t n, std::vector<arc> arcs);

	std::size_t vertex_count() const noexcept { return out_.size(); }
	std::size_t arc_count() const noexcept { return arcs_.size(); }
	const std::vector<arc> &arcs() const noexcept { return arcs_; }
	std::span<const vertex> out_neighbors(vertex v) const { return out_.at(v); }
	bool has_arc(vertex from, vertex to) const;

	bool operator==(const digraph &other) const {
		return out_.size() == other.out_.size() && arcs_ == other.arcs_;
	}

private:
	std::vector<arc> arcs_;
	std::vector<std::vector<vertex>> out_;
};

struct edge_add {
	vertex u = 0;
	vertex v = 0;
	bool operator==(const edge_add &) const = default;
};
struct edge_del {
	vertex u = 0;
	vertex v = 0;
	bool operator==(const edge_del &) const = default;
};
struct vertex_del {
	vertex v = 0;
	bool operator==(const vertex_del &) const = default;
};
struct vertex_add {
	std::vector<vertex> neighbors;
	bool operator==(const vertex_add &) const = default;
};

using local_modification = std::variant<edge_add, edge_del, vertex_del, vertex_add>;

std::string_view modification_name(const local_modification &m);
bool is_addition(const local_modification &m);

// Throws error(modification_invalid) when m does not apply to g.
void check_modification(const graph &g, const local_modification &m);

// Returns g with m applied. vertex_add appends vertex n; vertex_del removes
// v and shifts higher indices down by one, keeping labels attached.
graph apply_modification(const graph &g, const local_modification &m);

// A subgraph together with the index of each of its vertices in the parent.
struct subgraph {
	graph g;
	std::vector<vertex> to_parent;

	std::optional<vertex> from_parent(vertex parent_vertex) const;
};

subgraph induced_subgraph(const graph &g, const vertex_set &keep);
subgraph induced_subgraph(const graph &g, const std::vector<vertex> &keep);

// Vertex-to-component id (ids in order of smallest member) and the groups.
std::vector<std::size_t> component_ids(const graph &g);
std::vector<std::vector<vertex>> components(const graph &g);
subgraph component_of(const graph &g, vertex v);
subgraph component_of(const graph &g, edge e);
bool is_connected(const graph &g);
bool is_connected_subset(const graph &g, const vertex_set &s);

graph disjoint_union(const graph &g1, const graph &g2);

// Drops isolated vertices.
subgraph strip_isolated(const graph &g);

}  // namespace reokern
