#include "reokern/graph.hpp"

#include <algorithm>
#include <numeric>

#include "reokern/error.hpp"

namespace reokern {

edge make_edge(vertex a, vertex b) {
	return a < b ? edge{a, b} : edge{b, a};
}

graph::graph(std::size_t n, std::vector<edge> edges, std::vector<std::string> labels)
	: edges_(std::move(edges)), adj_(n), labels_(std::move(labels)) {
	if (!labels_.empty() && labels_.size() != n)
		throw error(error_code::invalid_graph, "label count differs from vertex count");
	for (auto &e : edges_) {
		if (e.u == e.v)
			throw error(error_code::invalid_graph, "self-loop at " + std::to_string(e.u));
		if (e.u >= n || e.v >= n)
			throw error(error_code::invalid_graph,
			            "edge endpoint out of range: {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
		e = make_edge(e.u, e.v);
	}
	std::sort(edges_.begin(), edges_.end());
	if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
		throw error(error_code::invalid_graph, "duplicate edge");
	for (const auto &e : edges_) {
		adj_[e.u].push_back(e.v);
		adj_[e.v].push_back(e.u);
	}
	for (auto &nb : adj_)
		std::sort(nb.begin(), nb.end());
}

bool graph::has_edge(vertex a, vertex b) const {
	if (a >= adj_.size() || b >= adj_.size())
		return false;
	const auto &nb = adj_[a];
	return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<vertex> graph::find_label(std::string_view name) const {
	for (std::size_t i = 0; i < labels_.size(); ++i)
		if (labels_[i] == name)
			return static_cast<vertex>(i);
	return std::nullopt;
}

vertex graph_builder::add_vertex(std::string label) {
	if (!label.empty() || !labels_.empty()) {
		labels_.resize(n_);
		labels_.push_back(std::move(label));
	}
	return static_cast<vertex>(n_++);
}

graph_builder &graph_builder::add_edge(vertex a, vertex b) {
	edges_.push_back(make_edge(a, b));
	return *this;
}

graph_builder &graph_builder::set_label(vertex v, std::string label) {
	labels_.resize(n_);
	labels_.at(v) = std::move(label);
	return *this;
}

graph graph_builder::build() const {
	auto labels = labels_;
	if (!labels.empty())
		labels.resize(n_);
	return graph(n_, edges_, std::move(labels));
}

namespace graphs {

graph empty(std::size_t n) {
	return graph(n);
}

graph path(std::size_t n) {
	std::vector<edge> e;
	for (std::size_t i = 1; i < n; ++i)
		e.push_back({static_cast<vertex>(i - 1), static_cast<vertex>(i)});
	return graph(n, std::move(e));
}

graph cycle(std::size_t n) {
	std::vector<edge> e;
	for (std::size_t i = 0; i < n; ++i)
		e.push_back(make_edge(static_cast<vertex>(i), static_cast<vertex>((i + 1) % n)));
	return graph(n, std::move(e));
}

graph complete(std::size_t n) {
	std::vector<edge> e;
	for (vertex i = 0; i < n; ++i)
		for (vertex j = i + 1; j < n; ++j)
			e.push_back({i, j});
	return graph(n, std::move(e));
}

graph star(std::size_t leaves) {
	std::vector<edge> e;
	for (vertex i = 1; i <= leaves; ++i)
		e.push_back({0, i});
	return graph(leaves + 1, std::move(e));
}

graph complete_bipartite(std::size_t a, std::size_t b) {
	std::vector<edge> e;
	for (vertex i = 0; i < a; ++i)
		for (vertex j = 0; j < b; ++j)
			e.push_back({i, static_cast<vertex>(a + j)});
	return graph(a + b, std::move(e));
}

}  // namespace graphs

digraph::digraph(std::size_t n, std::vector<arc> arcs) : arcs_(std::move(arcs)), out_(n) {
	for (const auto &a : arcs_) {
		if (a.from == a.to)
			throw error(error_code::invalid_graph, "self-loop arc");
		if (a.from >= n || a.to >= n)
			throw error(error_code::invalid_graph, "arc endpoint out of range");
	}
	std::sort(arcs_.begin(), arcs_.end());
	if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
		throw error(error_code::invalid_graph, "duplicate arc");
	for (const auto &a : arcs_)
		out_[a.from].push_back(a.to);
}

bool digraph::has_arc(vertex from, vertex to) const {
	if (from >= out_.size())
		return false;
	const auto &nb = out_[from];
	return std::binary_search(nb.begin(), nb.end(), to);
}

std::string_view modification_name(const local_modification &m) {
	struct visitor {
		std::string_view operator()(const edge_add &) const { return "edge_add"; }
		std::string_view operator()(const edge_del &) const { return "edge_del"; }
		std::string_view operator()(const vertex_del &) const { return "vertex_del"; }
		std::string_view operator()(const vertex_add &) const { return "vertex_add"; }
	};
	return std::visit(visitor{}, m);
}

bool is_addition(const local_modification &m) {
	return std::holds_alternative<edge_add>(m) || std::holds_alternative<vertex_add>(m);
}

void check_modification(const graph &g, const local_modification &m) {
	const auto n = g.vertex_count();
	auto fail = [](const std::string &why) { throw error(error_code::modification_invalid, why); };
	if (const auto *a = std::get_if<edge_add>(&m)) {
		if (a->u == a->v)
			fail("edge_add endpoints coincide");
		if (a->u >= n || a->v >= n)
			fail("edge_add endpoint out of range");
		if (g.has_edge(a->u, a->v))
			fail("edge_add: edge already present");
	} else if (const auto *d = std::get_if<edge_del>(&m)) {
		if (!g.has_edge(d->u, d->v))
			fail("edge_del: edge absent");
	} else if (const auto *vd = std::get_if<vertex_del>(&m)) {
		if (vd->v >= n)
			fail("vertex_del: vertex out of range");
	} else {
		const auto &va = std::get<vertex_add>(m);
		vertex_set seen;
		for (vertex w : va.neighbors) {
			if (w >= n)
				fail("vertex_add: neighbor out of range");
			if (!seen.insert(w).second)
				fail("vertex_add: repeated neighbor");
		}
	}
}

graph apply_modification(const graph &g, const local_modification &m) {
	check_modification(g, m);
	const auto n = g.vertex_count();
	std::vector<edge> edges = g.edges();
	if (const auto *a = std::get_if<edge_add>(&m)) {
		edges.push_back(make_edge(a->u, a->v));
		return graph(n, std::move(edges), g.labels());
	}
	if (const auto *d = std::get_if<edge_del>(&m)) {
		std::erase(edges, make_edge(d->u, d->v));
		return graph(n, std::move(edges), g.labels());
	}
	if (const auto *vd = std::get_if<vertex_del>(&m)) {
		std::vector<vertex> keep;
		for (vertex w = 0; w < n; ++w)
			if (w != vd->v)
				keep.push_back(w);
		return induced_subgraph(g, keep).g;
	}
	const auto &va = std::get<vertex_add>(m);
	const auto nv = static_cast<vertex>(n);
	for (vertex w : va.neighbors)
		edges.push_back({w, nv});
	auto labels = g.labels();
	if (!labels.empty())
		labels.emplace_back();
	return graph(n + 1, std::move(edges), std::move(labels));
}

std::optional<vertex> subgraph::from_parent(vertex parent_vertex) const {
	auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_vertex);
	if (it == to_parent.end() || *it != parent_vertex)
		return std::nullopt;
	return static_cast<vertex>(it - to_parent.begin());
}

subgraph induced_subgraph(const graph &g, const std::vector<vertex> &keep) {
	std::vector<vertex> order = keep;
	std::sort(order.begin(), order.end());
	order.erase(std::unique(order.begin(), order.end()), order.end());
	const auto n = g.vertex_count();
	std::vector<std::int64_t> index(n, -1);
	for (std::size_t i = 0; i < order.size(); ++i) {
		if (order[i] >= n)
			throw error(error_code::vertex_out_of_range, "induced_subgraph: " + std::to_string(order[i]));
		index[order[i]] = static_cast<std::int64_t>(i);
	}
	std::vector<edge> edges;
	for (const auto &e : g.edges())
		if (index[e.u] >= 0 && index[e.v] >= 0)
			edges.push_back({static_cast<vertex>(index[e.u]), static_cast<vertex>(index[e.v])});
	std::vector<std::string> labels;
	if (g.has_labels())
		for (vertex v : order)
			labels.push_back(g.label(v));
	return {graph(order.size(), std::move(edges), std::move(labels)), std::move(order)};
}

subgraph induced_subgraph(const graph &g, const vertex_set &keep) {
	return induced_subgraph(g, std::vector<vertex>(keep.begin(), keep.end()));
}

std::vector<std::size_t> component_ids(const graph &g) {
	const auto n = g.vertex_count();
	constexpr auto unset = static_cast<std::size_t>(-1);
	std::vector<std::size_t> id(n, unset);
	std::size_t next = 0;
	std::vector<vertex> stack;
	for (vertex s = 0; s < n; ++s) {
		if (id[s] != unset)
			continue;
		id[s] = next;
		stack.push_back(s);
		while (!stack.empty()) {
			vertex v = stack.back();
			stack.pop_back();
			for (vertex w : g.neighbors(v))
				if (id[w] == unset) {
					id[w] = next;
					stack.push_back(w);
				}
		}
		++next;
	}
	return id;
}

std::vector<std::vector<vertex>> components(const graph &g) {
	auto id = component_ids(g);
	std::size_t count = 0;
	for (auto c : id)
		count = std::max(count, c + 1);
	std::vector<std::vector<vertex>> out(count);
	for (vertex v = 0; v < id.size(); ++v)
		out[id[v]].push_back(v);
	return out;
}

subgraph component_of(const graph &g, vertex v) {
	if (v >= g.vertex_count())
		throw error(error_code::vertex_out_of_range, "component_of: " + std::to_string(v));
	auto id = component_ids(g);
	std::vector<vertex> keep;
	for (vertex w = 0; w < id.size(); ++w)
		if (id[w] == id[v])
			keep.push_back(w);
	return induced_subgraph(g, keep);
}

subgraph component_of(const graph &g, edge e) {
	if (!g.has_edge(e.u, e.v))
		throw error(error_code::vertex_out_of_range, "component_of: edge not in graph");
	return component_of(g, e.u);
}

bool is_connected(const graph &g) {
	return components(g).size() <= 1;
}

bool is_connected_subset(const graph &g, const vertex_set &s) {
	if (s.empty())
		return true;
	return is_connected(induced_subgraph(g, s).g);
}

graph disjoint_union(const graph &g1, const graph &g2) {
	const auto n1 = static_cast<vertex>(g1.vertex_count());
	std::vector<edge> edges = g1.edges();
	for (const auto &e : g2.edges())
		edges.push_back({e.u + n1, e.v + n1});
	std::vector<std::string> labels;
	if (g1.has_labels() || g2.has_labels()) {
		labels = g1.labels();
		labels.resize(g1.vertex_count());
		auto rest = g2.labels();
		rest.resize(g2.vertex_count());
		labels.insert(labels.end(), rest.begin(), rest.end());
	}
	return graph(g1.vertex_count() + g2.vertex_count(), std::move(edges), std::move(labels));
}

subgraph strip_isolated(const graph &g) {
	std::vector<vertex> keep;
	for (vertex v = 0; v < g.vertex_count(); ++v)
		if (g.degree(v) > 0)
			keep.push_back(v);
	return induced_subgraph(g, keep);
}

}  // namespace reokern
