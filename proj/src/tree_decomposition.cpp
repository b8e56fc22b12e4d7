#include "reokern/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "reokern/error.hpp"

namespace reokern {

int tree_decomposition::width() const {
	int w = -1;
	for (const auto &b : bags)
		w = std::max(w, static_cast<int>(b.size()) - 1);
	return w;
}

namespace {

bool is_permutation_of_vertices(const graph &g, const std::vector<vertex> &order) {
	if (order.size() != g.vertex_count())
		return false;
	std::vector<char> seen(order.size(), 0);
	for (vertex v : order) {
		if (v >= order.size() || seen[v])
			return false;
		seen[v] = 1;
	}
	return true;
}

// Later-neighbour sets of the filled graph.
std::vector<vertex_set> fill_in(const graph &g, const std::vector<vertex> &order) {
	const auto n = g.vertex_count();
	std::vector<std::size_t> pos(n);
	for (std::size_t i = 0; i < n; ++i)
		pos[order[i]] = i;
	std::vector<vertex_set> nb(n);
	for (const auto &e : g.edges()) {
		nb[e.u].insert(e.v);
		nb[e.v].insert(e.u);
	}
	std::vector<vertex_set> later(n);
	for (std::size_t i = 0; i < n; ++i) {
		vertex v = order[i];
		for (vertex w : nb[v])
			if (pos[w] > i)
				later[v].insert(w);
		for (vertex a : later[v])
			for (vertex b : later[v])
				if (a != b)
					nb[a].insert(b);
	}
	return later;
}

}  // namespace

int elimination_width(const graph &g, const std::vector<vertex> &order) {
	if (!is_permutation_of_vertices(g, order))
		throw error(error_code::precondition_violated, "elimination order is not a permutation of V");
	int w = g.empty() ? -1 : 0;
	for (const auto &l : fill_in(g, order))
		w = std::max(w, static_cast<int>(l.size()));
	return w;
}

tree_decomposition decomposition_from_ordering(const graph &g, const std::vector<vertex> &order) {
	if (!is_permutation_of_vertices(g, order))
		throw error(error_code::precondition_violated, "elimination order is not a permutation of V");
	const auto n = g.vertex_count();
	std::vector<std::size_t> pos(n);
	for (std::size_t i = 0; i < n; ++i)
		pos[order[i]] = i;
	const auto later = fill_in(g, order);

	tree_decomposition td;
	td.bags.resize(n);
	std::vector<std::size_t> roots;
	for (std::size_t i = 0; i < n; ++i) {
		vertex v = order[i];
		td.bags[i] = later[v];
		td.bags[i].insert(v);
		if (later[v].empty()) {
			roots.push_back(i);
			continue;
		}
		vertex parent = *std::min_element(later[v].begin(), later[v].end(),
		                                  [&](vertex a, vertex b) { return pos[a] < pos[b]; });
		td.tree.push_back(make_edge(static_cast<vertex>(i), static_cast<vertex>(pos[parent])));
	}
	for (std::size_t r = 1; r < roots.size(); ++r)
		td.tree.push_back(make_edge(static_cast<vertex>(roots[r - 1]), static_cast<vertex>(roots[r])));
	return td;
}

bool is_valid_tree_decomposition(const graph &g, const tree_decomposition &td) {
	const auto n = g.vertex_count();
	const auto bag_count = td.bags.size();
	if (bag_count == 0)
		return n == 0;
	// The bag tree must be a tree.
	if (td.tree.size() != bag_count - 1)
		return false;
	graph tree_graph;
	try {
		tree_graph = graph(bag_count, td.tree);
	} catch (const error &) {
		return false;
	}
	if (!is_connected(tree_graph))
		return false;

	std::vector<std::vector<vertex>> holding(n);
	for (std::size_t i = 0; i < bag_count; ++i)
		for (vertex v : td.bags[i]) {
			if (v >= n)
				return false;
			holding[v].push_back(static_cast<vertex>(i));
		}
	for (vertex v = 0; v < n; ++v) {
		if (holding[v].empty())
			return false;
		if (!is_connected(induced_subgraph(tree_graph, holding[v]).g))
			return false;
	}
	for (const auto &e : g.edges()) {
		bool found = false;
		for (const auto &b : td.bags)
			if (b.count(e.u) && b.count(e.v)) {
				found = true;
				break;
			}
		if (!found)
			return false;
	}
	return true;
}

}  // namespace reokern
