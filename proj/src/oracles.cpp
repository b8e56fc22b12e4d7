#include "reokern/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "reokern/error.hpp"

namespace reokern {

namespace {

using mask = std::uint64_t;

constexpr mask bit(vertex v) { return mask{1} << v; }
int popcount(mask m) { return std::popcount(m); }
vertex lowest(mask m) { return static_cast<vertex>(std::countr_zero(m)); }

void guard(bool ok, std::string_view what, std::size_t got, std::size_t limit) {
	if (!ok)
		throw error(error_code::size_guard_exceeded,
		            std::string(what) + " " + std::to_string(got) + " exceeds limit " + std::to_string(limit));
}

void guard_vertices(const graph &g, std::size_t limit, std::string_view solver) {
	guard(g.vertex_count() <= limit && g.vertex_count() <= 64, std::string(solver) + ": n =", g.vertex_count(),
	      std::min<std::size_t>(limit, 64));
}

std::vector<mask> adjacency(const graph &g) {
	std::vector<mask> adj(g.vertex_count(), 0);
	for (const auto &e : g.edges()) {
		adj[e.u] |= bit(e.v);
		adj[e.v] |= bit(e.u);
	}
	return adj;
}

mask all_vertices(std::size_t n) { return n == 64 ? ~mask{0} : (bit(static_cast<vertex>(n)) - 1); }

vertex_set to_set(mask m) {
	vertex_set s;
	for (; m; m &= m - 1)
		s.insert(lowest(m));
	return s;
}

std::vector<vertex> to_vector(mask m) {
	std::vector<vertex> s;
	for (; m; m &= m - 1)
		s.push_back(lowest(m));
	return s;
}

// Minimum vertex cover of G[alive] by branching on a maximum degree vertex.
class vc_brancher {
public:
	explicit vc_brancher(const std::vector<mask> &adj) : adj_(adj) {}

	int solve(mask alive, int ceiling) {
		best_ = ceiling;
		rec(alive, 0);
		return best_;
	}

private:
	const std::vector<mask> &adj_;
	int best_ = 0;

	void rec(mask alive, int size) {
		if (size >= best_)
			return;
		// Degree-one vertices: taking the neighbour is safe.
		for (bool changed = true; changed;) {
			changed = false;
			for (mask it = alive; it; it &= it - 1) {
				vertex v = lowest(it);
				mask nb = adj_[v] & alive;
				if (popcount(nb) == 1) {
					alive &= ~(nb | bit(v));
					++size;
					changed = true;
					break;
				}
				if (nb == 0)
					alive &= ~bit(v);
			}
			if (size >= best_)
				return;
		}
		vertex pick = 0;
		int deg = -1;
		int edges2 = 0;
		for (mask it = alive; it; it &= it - 1) {
			vertex v = lowest(it);
			int d = popcount(adj_[v] & alive);
			edges2 += d;
			if (d > deg) {
				deg = d;
				pick = v;
			}
		}
		if (deg <= 0) {
			best_ = std::min(best_, size);
			return;
		}
		// Each cover vertex covers at most deg edges.
		const int edges = edges2 / 2;
		if (size + (edges + deg - 1) / deg >= best_)
			return;
		mask nb = adj_[pick] & alive;
		rec(alive & ~nb & ~bit(pick), size + popcount(nb));
		rec(alive & ~bit(pick), size + 1);
	}
};

// Cost of the best cover that contains `in` and avoids `out`, or nullopt.
std::optional<int> constrained_vc(const std::vector<mask> &adj, mask universe, mask in, mask out) {
	mask forced = in;
	for (mask it = out; it; it &= it - 1)
		forced |= adj[lowest(it)] & universe;
	if (forced & out)
		return std::nullopt;
	mask alive = universe & ~forced & ~out;
	vc_brancher b(adj);
	return popcount(forced) + b.solve(alive, popcount(alive) + 1);
}

void all_min_vc_rec(const std::vector<mask> &adj, mask universe, std::size_t n, int opt, vertex v, mask in, mask out,
                    std::vector<vertex_set> &acc) {
	auto cost = constrained_vc(adj, universe, in, out);
	if (!cost || *cost != opt)
		return;
	if (v == n) {
		acc.push_back(to_set(in));
		return;
	}
	all_min_vc_rec(adj, universe, n, opt, v + 1, in | bit(v), out, acc);
	all_min_vc_rec(adj, universe, n, opt, v + 1, in, out | bit(v), acc);
}

// ---- connected vertex cover ----

class cvc_solver {
public:
	cvc_solver(const std::vector<mask> &adj, mask comp) : adj_(adj), comp_(comp) {}

	mask solve() {
		best_ = comp_;
		best_size_ = popcount(comp_);
		mask forced = 0;
		for (mask it = comp_; it; it &= it - 1) {
			vertex v = lowest(it);
			if (popcount(adj_[v]) == 1)
				forced |= adj_[v];
		}
		rec(forced, 0);
		return best_;
	}

private:
	const std::vector<mask> &adj_;
	mask comp_;
	mask best_ = 0;
	int best_size_ = 0;

	void rec(mask in, mask out) {
		const int size = popcount(in);
		if (size >= best_size_)
			return;
		// Uncovered edges and a matching lower bound over them.
		mask open = comp_ & ~in;
		mask used = 0;
		int lb = 0;
		vertex pick = 0;
		int pick_deg = 0;
		for (mask it = open; it; it &= it - 1) {
			vertex v = lowest(it);
			mask nb = adj_[v] & open;
			int d = popcount(nb);
			if (d > pick_deg) {
				pick_deg = d;
				pick = v;
			}
			if (!(used & bit(v))) {
				mask free_nb = nb & ~used;
				if (free_nb) {
					used |= bit(v) | bit(lowest(free_nb));
					++lb;
				}
			}
		}
		if (pick_deg == 0) {
			complete(in);
			return;
		}
		if (size + lb >= best_size_)
			return;
		if (!(out & bit(pick)))
			rec(in | bit(pick), out);
		mask nb = adj_[pick] & comp_;
		if (!(nb & out))
			rec(in | nb, out | bit(pick));
	}

	// `in` is a vertex cover; add the fewest outside vertices to connect it.
	void complete(mask in) {
		std::vector<mask> parts;
		for (mask rest = in; rest;) {
			mask part = bit(lowest(rest));
			for (mask frontier = part; frontier;) {
				mask next = 0;
				for (mask it = frontier; it; it &= it - 1)
					next |= adj_[lowest(it)] & in;
				frontier = next & ~part;
				part |= next;
			}
			parts.push_back(part);
			rest &= ~part;
		}
		const int base = popcount(in);
		if (parts.size() == 1) {
			if (base < best_size_) {
				best_size_ = base;
				best_ = in;
			}
			return;
		}
		// Outside vertices are pairwise non-adjacent, so only those touching
		// two parts help.
		std::vector<vertex> cand;
		std::vector<std::vector<int>> touches;
		for (mask it = comp_ & ~in; it; it &= it - 1) {
			vertex v = lowest(it);
			std::vector<int> t;
			for (std::size_t p = 0; p < parts.size(); ++p)
				if (adj_[v] & parts[p])
					t.push_back(static_cast<int>(p));
			if (t.size() >= 2) {
				cand.push_back(v);
				touches.push_back(std::move(t));
			}
		}
		const int budget = best_size_ - 1 - base;
		std::vector<int> chosen;
		for (int r = 1; r <= budget && r <= static_cast<int>(cand.size()); ++r) {
			if (choose(cand, touches, parts.size(), r, 0, chosen)) {
				mask extra = 0;
				for (int c : chosen)
					extra |= bit(cand[c]);
				best_size_ = base + r;
				best_ = in | extra;
				return;
			}
		}
	}

	static bool joins_all(const std::vector<std::vector<int>> &touches, std::size_t part_count,
	                      const std::vector<int> &chosen) {
		std::vector<int> parent(part_count);
		std::iota(parent.begin(), parent.end(), 0);
		std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
		std::size_t groups = part_count;
		for (int c : chosen)
			for (std::size_t i = 1; i < touches[c].size(); ++i) {
				int a = find(touches[c][0]);
				int b = find(touches[c][i]);
				if (a != b) {
					parent[a] = b;
					--groups;
				}
			}
		return groups == 1;
	}

	static bool choose(const std::vector<vertex> &cand, const std::vector<std::vector<int>> &touches,
	                   std::size_t part_count, int r, std::size_t from, std::vector<int> &chosen) {
		if (static_cast<int>(chosen.size()) == r)
			return joins_all(touches, part_count, chosen);
		for (std::size_t i = from; i < cand.size(); ++i) {
			chosen.push_back(static_cast<int>(i));
			if (choose(cand, touches, part_count, r, i + 1, chosen))
				return true;
			chosen.pop_back();
		}
		return false;
	}
};

// ---- internal vertex subtree ----

struct local_component {
	std::vector<vertex> names;  // local index -> global vertex
	std::vector<mask> adj;
	std::vector<edge> edges;    // local
};

local_component localize(const graph &g, const std::vector<vertex> &comp) {
	local_component lc;
	lc.names = comp;
	const auto sub = induced_subgraph(g, comp);
	lc.adj = adjacency(sub.g);
	lc.edges = sub.g.edges();
	return lc;
}

std::optional<std::vector<vertex>> hamiltonian_path(const std::vector<mask> &adj) {
	const auto n = adj.size();
	if (n == 0)
		return std::nullopt;
	const std::size_t full = (std::size_t{1} << n) - 1;
	// ends[S] = vertices v such that some path covers exactly S and ends at v.
	std::vector<mask> ends(full + 1, 0);
	for (vertex v = 0; v < n; ++v)
		ends[bit(v)] = bit(v);
	for (std::size_t s = 1; s <= full; ++s)
		for (mask it = ends[s]; it; it &= it - 1) {
			vertex v = lowest(it);
			for (mask nx = adj[v] & ~mask(s); nx; nx &= nx - 1) {
				vertex w = lowest(nx);
				ends[s | bit(w)] |= bit(w);
			}
		}
	if (!ends[full])
		return std::nullopt;
	std::vector<vertex> path;
	mask s = full;
	vertex v = lowest(ends[full]);
	path.push_back(v);
	while (popcount(s) > 1) {
		mask prev = s & ~bit(v);
		vertex u = lowest(ends[prev] & adj[v]);
		path.push_back(u);
		s = prev;
		v = u;
	}
	return path;
}

// Best spanning tree by internal count, stopping once `target` is reached.
class spanning_tree_search {
public:
	spanning_tree_search(const local_component &lc, int target) : lc_(lc), target_(target) {}

	std::pair<int, std::vector<edge>> run() {
		const auto n = lc_.adj.size();
		std::vector<int> uf(n);
		std::iota(uf.begin(), uf.end(), 0);
		std::vector<int> deg(n, 0);
		rec(0, uf, deg);
		return {best_, best_tree_};
	}

private:
	const local_component &lc_;
	int target_;
	int best_ = -1;
	std::vector<edge> best_tree_;
	std::vector<edge> chosen_;

	static int find(std::vector<int> &uf, int x) {
		while (uf[x] != x)
			x = uf[x] = uf[uf[x]];
		return x;
	}

	void rec(std::size_t idx, std::vector<int> &uf, std::vector<int> &deg) {
		if (best_ >= target_)
			return;
		const auto n = lc_.adj.size();
		if (chosen_.size() + 1 == n) {
			int internal = 0;
			for (int d : deg)
				internal += d >= 2;
			if (internal > best_) {
				best_ = internal;
				best_tree_ = chosen_;
			}
			return;
		}
		if (lc_.edges.size() - idx < n - 1 - chosen_.size())
			return;
		const auto &e = lc_.edges[idx];
		int a = find(uf, static_cast<int>(e.u));
		int b = find(uf, static_cast<int>(e.v));
		if (a != b) {
			auto saved = uf;
			uf[a] = b;
			++deg[e.u];
			++deg[e.v];
			chosen_.push_back(e);
			rec(idx + 1, uf, deg);
			chosen_.pop_back();
			--deg[e.u];
			--deg[e.v];
			uf = std::move(saved);
		}
		rec(idx + 1, uf, deg);
	}
};

exact_solution ivst_component(const graph &g, const std::vector<vertex> &comp) {
	exact_solution out;
	const auto nc = comp.size();
	if (nc == 1) {
		out.witness.vertices = {comp[0]};
		return out;
	}
	const auto lc = localize(g, comp);
	if (nc == 2) {
		out.witness.edges = {make_edge(comp[0], comp[1])};
		return out;
	}
	if (auto hp = hamiltonian_path(lc.adj)) {
		out.value = static_cast<int>(nc) - 2;
		for (std::size_t i = 0; i + 1 < hp->size(); ++i)
			out.witness.edges.push_back(make_edge(comp[(*hp)[i]], comp[(*hp)[i + 1]]));
		std::sort(out.witness.edges.begin(), out.witness.edges.end());
		return out;
	}
	spanning_tree_search search(lc, static_cast<int>(nc) - 3);
	auto [value, tree] = search.run();
	out.value = value;
	for (const auto &e : tree)
		out.witness.edges.push_back(make_edge(comp[e.u], comp[e.v]));
	std::sort(out.witness.edges.begin(), out.witness.edges.end());
	return out;
}

// ---- clique ----

class clique_search {
public:
	explicit clique_search(const std::vector<mask> &adj) : adj_(adj) {}

	int solve(mask cand, int base) {
		best_ = 0;
		rec(cand, 0);
		return base + best_;
	}

private:
	const std::vector<mask> &adj_;
	int best_ = 0;

	void rec(mask cand, int size) {
		if (!cand) {
			best_ = std::max(best_, size);
			return;
		}
		while (cand) {
			if (size + popcount(cand) <= best_)
				return;
			vertex v = lowest(cand);
			cand &= ~bit(v);
			rec(cand & adj_[v], size + 1);
		}
	}
};

// ---- treewidth ----

struct treewidth_table {
	std::vector<int> tw;
	std::vector<vertex> last;  // argmin vertex eliminated last among S
};

treewidth_table treewidth_dp(const graph &g) {
	const auto n = g.vertex_count();
	const auto adj = adjacency(g);
	const std::size_t full = (std::size_t{1} << n);
	treewidth_table t;
	t.tw.assign(full, std::numeric_limits<int>::max());
	t.last.assign(full, 0);
	t.tw[0] = std::numeric_limits<int>::min();
	for (std::size_t s = 1; s < full; ++s) {
		for (mask it = s; it; it &= it - 1) {
			vertex v = lowest(it);
			mask before = s & ~bit(v);
			// Vertices outside S reached from v through `before`.
			mask reach = bit(v);
			for (mask frontier = reach; frontier;) {
				mask next = 0;
				for (mask f = frontier; f; f &= f - 1)
					next |= adj[lowest(f)] & before;
				frontier = next & ~reach;
				reach |= next;
			}
			mask q = 0;
			for (mask r = reach; r; r &= r - 1)
				q |= adj[lowest(r)];
			q &= ~mask(s);
			int cost = std::max(t.tw[before], popcount(q));
			if (cost < t.tw[s]) {
				t.tw[s] = cost;
				t.last[s] = v;
			}
		}
	}
	return t;
}

// ---- helpers for verification ----

bool distinct_in_range(const std::vector<vertex> &vs, std::size_t n) {
	std::vector<char> seen(n, 0);
	for (vertex v : vs) {
		if (v >= n || seen[v])
			return false;
		seen[v] = 1;
	}
	return true;
}

std::optional<int> tree_internal_count(const graph &g, const solution &c) {
	const auto n = g.vertex_count();
	if (c.edges.empty()) {
		if (c.vertices.size() == 1 && c.vertices[0] < n)
			return 0;
		return std::nullopt;
	}
	vertex_set touched;
	std::vector<edge> es;
	for (const auto &e0 : c.edges) {
		if (e0.u >= n || e0.v >= n || e0.u == e0.v)
			return std::nullopt;
		edge e = make_edge(e0.u, e0.v);
		if (!g.has_edge(e.u, e.v))
			return std::nullopt;
		es.push_back(e);
		touched.insert(e.u);
		touched.insert(e.v);
	}
	std::sort(es.begin(), es.end());
	if (std::adjacent_find(es.begin(), es.end()) != es.end())
		return std::nullopt;
	if (es.size() + 1 != touched.size())
		return std::nullopt;
	graph t(n, es);
	if (!is_connected_subset(t, touched))
		return std::nullopt;
	int internal = 0;
	for (vertex v : touched)
		internal += t.degree(v) >= 2;
	return internal;
}

}  // namespace

const oracle_limits &default_limits() {
	static const oracle_limits lim;
	return lim;
}

bool is_vertex_cover(const graph &g, const vertex_set &s) {
	for (const auto &e : g.edges())
		if (!s.count(e.u) && !s.count(e.v))
			return false;
	return true;
}

bool is_connected_vertex_cover(const graph &g, const vertex_set &s) {
	return is_vertex_cover(g, s) && is_connected_subset(g, s);
}

exact_solution solve_vertex_cover(const graph &g, const oracle_limits &lim) {
	guard_vertices(g, lim.vc_vertices, "vertex cover");
	const auto n = g.vertex_count();
	const auto adj = adjacency(g);
	const mask universe = all_vertices(n);
	vc_brancher b(adj);
	const int opt = b.solve(universe, static_cast<int>(n) + 1);

	mask in = 0, out = 0;
	for (vertex v = 0; v < n; ++v) {
		auto c = constrained_vc(adj, universe, in | bit(v), out);
		if (c && *c == opt)
			in |= bit(v);
		else
			out |= bit(v);
	}
	exact_solution r;
	r.value = opt;
	r.witness.vertices = to_vector(in);
	return r;
}

std::vector<vertex_set> all_minimum_vertex_covers(const graph &g, const oracle_limits &lim) {
	guard_vertices(g, lim.vc_vertices, "vertex cover");
	const auto n = g.vertex_count();
	const auto adj = adjacency(g);
	const mask universe = all_vertices(n);
	vc_brancher b(adj);
	const int opt = b.solve(universe, static_cast<int>(n) + 1);
	std::vector<vertex_set> acc;
	all_min_vc_rec(adj, universe, n, opt, 0, 0, 0, acc);
	return acc;
}

exact_solution solve_connected_vertex_cover(const graph &g, const oracle_limits &lim) {
	guard_vertices(g, lim.cvc_vertices, "connected vertex cover");
	exact_solution r;
	std::vector<std::vector<vertex>> nontrivial;
	for (auto &c : components(g))
		if (c.size() >= 2)
			nontrivial.push_back(std::move(c));
	if (nontrivial.empty())
		return r;
	if (nontrivial.size() > 1) {
		r.feasible = false;
		r.value = static_cast<int>(g.vertex_count()) + 1;
		return r;
	}
	const auto &comp = nontrivial.front();
	if (comp.size() == 2) {
		r.value = 1;
		r.witness.vertices = {comp[0]};
		return r;
	}
	const auto adj = adjacency(g);
	mask cm = 0;
	for (vertex v : comp)
		cm |= bit(v);
	cvc_solver s(adj, cm);
	mask best = s.solve();
	r.value = popcount(best);
	r.witness.vertices = to_vector(best);
	return r;
}

exact_solution solve_ivst(const graph &g, const oracle_limits &lim) {
	guard(g.vertex_count() <= lim.ivst_vertices, "ivst: n =", g.vertex_count(), lim.ivst_vertices);
	exact_solution best;
	bool have = false;
	for (const auto &comp : components(g)) {
		auto r = ivst_component(g, comp);
		if (!have || r.value > best.value) {
			best = std::move(r);
			have = true;
		}
	}
	return best;
}

exact_solution solve_longest_path(const graph &g, const oracle_limits &lim) {
	guard(g.vertex_count() <= lim.longest_path_vertices && g.vertex_count() <= 20, "longest path: n =",
	      g.vertex_count(), lim.longest_path_vertices);
	const auto n = g.vertex_count();
	exact_solution r;
	if (n == 0)
		return r;
	const auto adj = adjacency(g);
	const std::size_t full = std::size_t{1} << n;
	std::vector<mask> ends(full, 0);
	for (vertex v = 0; v < n; ++v)
		ends[bit(v)] = bit(v);
	std::size_t best_set = 1;
	for (std::size_t s = 1; s < full; ++s) {
		if (!ends[s])
			continue;
		if (popcount(s) > popcount(best_set))
			best_set = s;
		for (mask it = ends[s]; it; it &= it - 1) {
			vertex v = lowest(it);
			for (mask nx = adj[v] & ~mask(s); nx; nx &= nx - 1)
				ends[s | bit(lowest(nx))] |= bit(lowest(nx));
		}
	}
	mask s = best_set;
	vertex v = lowest(ends[s]);
	std::vector<vertex> path{v};
	while (popcount(s) > 1) {
		mask prev = s & ~bit(v);
		vertex u = lowest(ends[prev] & adj[v]);
		path.push_back(u);
		s = prev;
		v = u;
	}
	r.value = static_cast<int>(path.size()) - 1;
	r.witness.vertices = std::move(path);
	return r;
}

exact_solution solve_clique(const graph &g, const oracle_limits &lim) {
	guard_vertices(g, lim.clique_vertices, "clique");
	const auto n = g.vertex_count();
	const auto adj = adjacency(g);
	clique_search cs(adj);
	const int opt = cs.solve(all_vertices(n), 0);
	mask in = 0;
	mask cand = all_vertices(n);
	for (vertex v = 0; v < n && popcount(in) < opt; ++v) {
		if (!(cand & bit(v)))
			continue;
		mask next = cand & adj[v];
		if (cs.solve(next, popcount(in) + 1) == opt) {
			in |= bit(v);
			cand = next;
		} else {
			cand &= ~bit(v);
		}
	}
	exact_solution r;
	r.value = opt;
	r.witness.vertices = to_vector(in);
	return r;
}

exact_solution solve_treewidth(const graph &g, const oracle_limits &lim) {
	guard(g.vertex_count() <= lim.treewidth_vertices && g.vertex_count() <= 24, "treewidth: n =", g.vertex_count(),
	      lim.treewidth_vertices);
	const auto n = g.vertex_count();
	exact_solution r;
	if (n == 0)
		return r;
	const auto t = treewidth_dp(g);
	std::size_t s = (std::size_t{1} << n) - 1;
	r.value = t.tw[s];
	std::vector<vertex> order(n);
	for (std::size_t i = n; i-- > 0;) {
		order[i] = t.last[s];
		s &= ~bit(t.last[s]);
	}
	r.witness.vertices = std::move(order);
	return r;
}

tree_decomposition optimal_tree_decomposition(const graph &g, const oracle_limits &lim) {
	auto r = solve_treewidth(g, lim);
	return decomposition_from_ordering(g, r.witness.vertices);
}

exact_solution solve_set_cover(const set_cover_instance &sc, const oracle_limits &lim) {
	check_set_cover(sc);
	guard(sc.family.size() <= lim.set_cover_sets, "set cover: t =", sc.family.size(), lim.set_cover_sets);
	const auto t = sc.family.size();
	std::vector<mask> sets(t, 0);
	for (std::size_t i = 0; i < t; ++i)
		for (int x : sc.family[i])
			sets[i] |= bit(static_cast<vertex>(x - 1));
	const mask goal = all_vertices(static_cast<std::size_t>(sc.universe));
	exact_solution r;
	// Combinations of increasing size in lexicographic order.
	for (std::size_t size = 0; size <= t; ++size) {
		std::vector<std::size_t> idx(size);
		std::iota(idx.begin(), idx.end(), 0);
		while (true) {
			mask covered = 0;
			for (auto i : idx)
				covered |= sets[i];
			if ((covered & goal) == goal) {
				r.value = static_cast<int>(size);
				for (auto i : idx)
					r.witness.vertices.push_back(static_cast<vertex>(i));
				return r;
			}
			std::size_t pos = size;
			while (pos > 0 && idx[pos - 1] == t - size + pos - 1)
				--pos;
			if (pos == 0)
				break;
			++idx[pos - 1];
			for (std::size_t j = pos; j < size; ++j)
				idx[j] = idx[j - 1] + 1;
		}
	}
	r.feasible = false;
	r.value = static_cast<int>(t) + 1;
	return r;
}

exact_solution solve_leaf_out_tree(const digraph &d, const oracle_limits &lim) {
	guard(d.vertex_count() <= lim.lot_vertices, "leaf out tree: n =", d.vertex_count(), lim.lot_vertices);
	guard(d.arc_count() <= lim.lot_arcs, "leaf out tree: arcs =", d.arc_count(), lim.lot_arcs);
	exact_solution r;
	if (d.vertex_count() == 0)
		return r;
	r.witness.vertices = {0};
	const auto &arcs = d.arcs();
	const std::size_t total = std::size_t{1} << arcs.size();
	for (std::size_t s = 1; s < total; ++s) {
		solution cand;
		for (std::size_t i = 0; i < arcs.size(); ++i)
			if (s & (std::size_t{1} << i))
				cand.edges.push_back({arcs[i].from, arcs[i].to});
		if (cand.edges.size() < static_cast<std::size_t>(r.value) + 1)
			continue;
		// Reuse the verifier at the next better value.
		if (verify_solution(d, r.value + 1, cand)) {
			int lo = r.value + 1;
			while (verify_solution(d, lo + 1, cand))
				++lo;
			r.value = lo;
			r.witness = std::move(cand);
		}
	}
	return r;
}

exact_solution solve_exact(problem_kind kind, const graph &g, const oracle_limits &lim) {
	switch (kind) {
	case problem_kind::vertex_cover: return solve_vertex_cover(g, lim);
	case problem_kind::connected_vertex_cover: return solve_connected_vertex_cover(g, lim);
	case problem_kind::ivst: return solve_ivst(g, lim);
	case problem_kind::longest_path: return solve_longest_path(g, lim);
	case problem_kind::clique: return solve_clique(g, lim);
	case problem_kind::treewidth: return solve_treewidth(g, lim);
	default: break;
	}
	throw error(error_code::unsupported_problem, "solve_exact on a graph: " + std::string(to_string(kind)));
}

bool is_member(problem_kind kind, const graph &g, int k, const oracle_limits &lim) {
	auto r = solve_exact(kind, g, lim);
	if (!r.feasible)
		return false;
	return direction_of(kind) == direction::min ? r.value <= k : r.value >= k;
}

bool is_member(const set_cover_instance &sc) {
	auto r = solve_set_cover(sc);
	return r.feasible && r.value <= sc.k;
}

bool is_member(const digraph &d, int k) { return solve_leaf_out_tree(d).value >= k; }

bool is_member(const reopt_instance &inst, const oracle_limits &lim) {
	return is_member(inst.problem, inst.modified_graph(), inst.modified_k, lim);
}

std::optional<int> solution_value(problem_kind kind, const graph &g, const solution &c) {
	const auto n = g.vertex_count();
	switch (kind) {
	case problem_kind::vertex_cover:
	case problem_kind::connected_vertex_cover: {
		if (!distinct_in_range(c.vertices, n))
			return std::nullopt;
		vertex_set s(c.vertices.begin(), c.vertices.end());
		if (!is_vertex_cover(g, s))
			return std::nullopt;
		if (kind == problem_kind::connected_vertex_cover && !is_connected_subset(g, s))
			return std::nullopt;
		return static_cast<int>(s.size());
	}
	case problem_kind::clique: {
		if (!distinct_in_range(c.vertices, n))
			return std::nullopt;
		for (std::size_t i = 0; i < c.vertices.size(); ++i)
			for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
				if (!g.has_edge(c.vertices[i], c.vertices[j]))
					return std::nullopt;
		return static_cast<int>(c.vertices.size());
	}
	case problem_kind::longest_path: {
		if (c.vertices.empty())
			return n == 0 ? std::optional<int>(0) : std::nullopt;
		if (!distinct_in_range(c.vertices, n))
			return std::nullopt;
		for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
			if (!g.has_edge(c.vertices[i], c.vertices[i + 1]))
				return std::nullopt;
		return static_cast<int>(c.vertices.size()) - 1;
	}
	case problem_kind::ivst:
		if (n == 0 && c.edges.empty() && c.vertices.empty())
			return 0;
		return tree_internal_count(g, c);
	case problem_kind::treewidth:
		if (c.vertices.size() != n || !distinct_in_range(c.vertices, n))
			return std::nullopt;
		return std::max(0, elimination_width(g, c.vertices));
	default:
		return std::nullopt;
	}
}

bool verify_solution(problem_kind kind, const graph &g, int k, const solution &candidate) {
	auto v = solution_value(kind, g, candidate);
	if (!v)
		return false;
	return direction_of(kind) == direction::min ? *v <= k : *v >= k;
}

bool verify_solution(const set_cover_instance &sc, const solution &c) {
	try {
		check_set_cover(sc);
	} catch (const error &) {
		return false;
	}
	if (!distinct_in_range(c.vertices, sc.family.size()))
		return false;
	if (static_cast<int>(c.vertices.size()) > sc.k)
		return false;
	std::vector<char> covered(static_cast<std::size_t>(sc.universe) + 1, 0);
	for (vertex i : c.vertices)
		for (int x : sc.family[i])
			covered[static_cast<std::size_t>(x)] = 1;
	for (int x = 1; x <= sc.universe; ++x)
		if (!covered[static_cast<std::size_t>(x)])
			return false;
	return true;
}

bool verify_solution(const digraph &d, int k, const solution &c) {
	const auto n = d.vertex_count();
	if (c.edges.empty()) {
		// A single vertex has no non-root leaves.
		return k <= 0 && (n == 0 || (c.vertices.size() <= 1 && (c.vertices.empty() || c.vertices[0] < n)));
	}
	std::vector<int> in(n, 0), out(n, 0);
	vertex_set touched;
	for (const auto &a : c.edges) {
		if (a.u >= n || a.v >= n || !d.has_arc(a.u, a.v))
			return false;
		if (++in[a.v] > 1)
			return false;
		++out[a.u];
		touched.insert(a.u);
		touched.insert(a.v);
	}
	if (c.edges.size() + 1 != touched.size())
		return false;
	std::vector<vertex> roots;
	for (vertex v : touched)
		if (in[v] == 0)
			roots.push_back(v);
	if (roots.size() != 1)
		return false;
	// Reachability from the root along the chosen arcs.
	std::vector<std::vector<vertex>> kids(n);
	for (const auto &a : c.edges)
		kids[a.u].push_back(a.v);
	std::vector<vertex> stack{roots[0]};
	std::size_t seen = 0;
	std::vector<char> vis(n, 0);
	vis[roots[0]] = 1;
	while (!stack.empty()) {
		vertex v = stack.back();
		stack.pop_back();
		++seen;
		for (vertex w : kids[v])
			if (!vis[w]) {
				vis[w] = 1;
				stack.push_back(w);
			}
	}
	if (seen != touched.size())
		return false;
	int leaves = 0;
	for (vertex v : touched)
		leaves += v != roots[0] && out[v] == 0;
	return leaves >= k;
}

bool verify_kernel_equivalence(problem_kind kind, const graph &g, int k, const kernel_result &result,
                               const oracle_limits &lim) {
	const bool original = is_member(kind, g, k, lim);
	if (auto d = result.decision())
		return original == *d;
	const auto &red = result.as_reduced();
	return original == is_member(kind, red.g, red.parameter, lim);
}

}  // namespace reokern
