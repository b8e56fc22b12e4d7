#include "reokern/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "reokern/error.hpp"

namespace reokern {

namespace {

digraph out_star(int leaves) {
	std::vector<digraph::arc> arcs;
	for (int i = 1; i <= leaves; ++i)
		arcs.push_back({0, static_cast<vertex>(i)});
	return digraph(static_cast<std::size_t>(leaves) + 1, std::move(arcs));
}

template <class F>
auto guarded(F &&f) {
	try {
		return f();
	} catch (const error &e) {
		if (e.code() == error_code::size_guard_exceeded)
			throw error(error_code::oracle_too_slow, e.what());
		throw;
	}
}

}  // namespace

std::variant<graph, digraph> build_extremal(problem_kind problem, int k) {
	if (k < 1)
		throw error(error_code::precondition_violated, "build_extremal: k < 1");
	const auto n = static_cast<std::size_t>(k);
	switch (problem) {
	case problem_kind::ivst: return graphs::path(n + 2);
	case problem_kind::clique: return graphs::complete(n);
	case problem_kind::treewidth: return graphs::complete(n + 2);
	case problem_kind::leaf_out_tree: return out_star(k);
	default: break;
	}
	throw error(error_code::unsupported_problem, "build_extremal: " + std::string(to_string(problem)));
}

bool is_extremal(const graph &g, problem_kind problem, int k, extremal_mode mode, const oracle_limits &lim) {
	const bool complement = problem == problem_kind::treewidth;
	const auto in = [&](const graph &h) {
		return guarded([&] { return is_member(problem, h, k, lim) != complement; });
	};
	if (!in(g))
		return false;
	const auto n = static_cast<vertex>(g.vertex_count());
	if (mode == extremal_mode::minimal_yes) {
		for (const auto &e : g.edges())
			if (in(apply_modification(g, edge_del{e.u, e.v})))
				return false;
		for (vertex v = 0; v < n; ++v)
			if (in(apply_modification(g, vertex_del{v})))
				return false;
		return true;
	}
	for (vertex a = 0; a < n; ++a)
		for (vertex b = a + 1; b < n; ++b)
			if (!g.has_edge(a, b) && in(apply_modification(g, edge_add{a, b})))
				return false;
	return true;
}

bool is_extremal(const digraph &d, int k, extremal_mode mode) {
	const auto in = [&](const digraph &h) { return guarded([&] { return is_member(h, k); }); };
	if (!in(d))
		return false;
	const auto n = static_cast<vertex>(d.vertex_count());
	const auto &arcs = d.arcs();
	if (mode == extremal_mode::minimal_yes) {
		for (std::size_t i = 0; i < arcs.size(); ++i) {
			auto rest = arcs;
			rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
			if (in(digraph(n, rest)))
				return false;
		}
		for (vertex v = 0; v < n; ++v) {
			std::vector<digraph::arc> rest;
			for (const auto &a : arcs)
				if (a.from != v && a.to != v)
					rest.push_back({a.from - (a.from > v), a.to - (a.to > v)});
			if (in(digraph(n - 1, rest)))
				return false;
		}
		return true;
	}
	for (vertex a = 0; a < n; ++a) {
		for (vertex b = 0; b < n; ++b) {
			if (a == b || d.has_arc(a, b))
				continue;
			auto more = arcs;
			more.push_back({a, b});
			if (in(digraph(n, more)))
				return false;
		}
	}
	return true;
}

reopt_instance build_negative_reopt_instance(problem_kind problem, const graph &g, int k, removal_kind removal) {
	const auto base = static_cast<vertex>(g.vertex_count());
	const auto need = [&](int min_k) {
		if (k < min_k)
			throw error(error_code::precondition_violated,
			            std::string(to_string(problem)) + " block needs k >= " + std::to_string(min_k));
	};
	reopt_instance inst;
	inst.problem = problem;
	inst.k = k;
	inst.modified_k = k;
	graph block;
	edge cut;
	vertex drop = 0;
	switch (problem) {
	case problem_kind::longest_path: {
		need(1);
		block = graphs::path(static_cast<std::size_t>(k) + 1);
		solution w;
		for (vertex i = 0; i <= static_cast<vertex>(k); ++i)
			w.vertices.push_back(base + i);
		inst.witness = w;
		const auto mid = static_cast<vertex>((k - 1) / 2);
		cut = {mid, mid + 1};
		drop = 1;
		break;
	}
	case problem_kind::ivst: {
		need(1);
		block = graphs::path(static_cast<std::size_t>(k) + 2);
		solution w;
		for (const auto &e : block.edges())
			w.edges.push_back({e.u + base, e.v + base});
		inst.witness = w;
		const auto mid = static_cast<vertex>(k / 2);
		cut = {mid, mid + 1};
		drop = 1;
		break;
	}
	case problem_kind::clique: {
		need(removal == removal_kind::edge ? 2 : 1);
		block = graphs::complete(static_cast<std::size_t>(k));
		solution w;
		for (vertex i = 0; i < static_cast<vertex>(k); ++i)
			w.vertices.push_back(base + i);
		inst.witness = w;
		cut = {0, 1};
		break;
	}
	case problem_kind::treewidth:
		need(0);
		block = graphs::complete(static_cast<std::size_t>(k) + 2);
		cut = {0, 1};
		break;
	default:
		throw error(error_code::unsupported_combination,
		            "no negative construction for " + std::string(to_string(problem)));
	}
	inst.original = disjoint_union(g, block);
	if (removal == removal_kind::edge)
		inst.modification = edge_del{cut.u + base, cut.v + base};
	else
		inst.modification = vertex_del{drop + base};
	return inst;
}

reopt_instance build_clique_reopt_instance(const graph &g, int k, clique_mode mode) {
	if (k < 0)
		throw error(error_code::precondition_violated, "build_clique_reopt_instance: k < 0");
	const auto n = static_cast<vertex>(g.vertex_count());
	reopt_instance inst;
	inst.problem = problem_kind::clique;
	if (mode == clique_mode::edge_add) {
		const auto b = static_cast<vertex>(k + 1);
		graph_builder gb(b + n + 2);
		for (vertex i = 0; i < b; ++i)
			for (vertex j = i + 1; j < b; ++j)
				gb.add_edge(i, j);
		for (const auto &e : g.edges())
			gb.add_edge(e.u + b, e.v + b);
		const vertex v1 = b + n, v2 = b + n + 1;
		for (vertex w = 0; w < n; ++w) {
			gb.add_edge(v1, w + b);
			gb.add_edge(v2, w + b);
		}
		inst.original = gb.build();
		inst.k = k + 1;
		solution w;
		for (vertex i = 0; i < b; ++i)
			w.vertices.push_back(i);
		inst.witness = w;
		inst.modification = edge_add{v1, v2};
		inst.modified_k = k + 2;
		return inst;
	}
	const auto b = static_cast<vertex>(k);
	inst.original = disjoint_union(graphs::complete(b), g);
	inst.k = k;
	solution w;
	for (vertex i = 0; i < b; ++i)
		w.vertices.push_back(i);
	inst.witness = w;
	vertex_add va;
	for (vertex x = 0; x < n; ++x)
		va.neighbors.push_back(x + b);
	inst.modification = va;
	inst.modified_k = k + 1;
	return inst;
}

vertex setcover_cvc_gadget::u(int i, int j) const { return static_cast<vertex>((i - 1) * cols() + j); }
vertex setcover_cvc_gadget::u_leaf(int i, int j) const { return static_cast<vertex>(rows() * cols()) + u(i, j); }
vertex setcover_cvc_gadget::f_set(int l) const { return static_cast<vertex>(2 * rows() * cols() + l - 1); }
vertex setcover_cvc_gadget::x() const { return static_cast<vertex>(2 * rows() * cols() + sets()); }
vertex setcover_cvc_gadget::v(int i) const { return x() + static_cast<vertex>(i); }
vertex setcover_cvc_gadget::f() const { return v(rows()) + 1; }
vertex setcover_cvc_gadget::y() const { return f() + 1; }

graph setcover_cvc_gadget::modified_graph() const { return apply_modification(g, edge_add{reopt_edge.u, reopt_edge.v}); }

reopt_instance setcover_cvc_gadget::reopt_view() const {
	return {problem_kind::connected_vertex_cover, g, c + 2, vertex_solution(s1), edge_add{reopt_edge.u, reopt_edge.v},
	        c + 1};
}

setcover_cvc_gadget build_setcover_cvc(const set_cover_instance &sc) {
	check_set_cover(sc);
	setcover_cvc_gadget gd;
	gd.sc = sc;
	const int rows = gd.rows(), cols = gd.cols(), t = gd.sets();
	const auto idx = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
	graph_builder gb(static_cast<std::size_t>(gd.y()) + 1);
	for (int i = 1; i <= rows; ++i) {
		for (int j = 0; j < cols; ++j) {
			gb.set_label(gd.u(i, j), "u_{" + idx(i, j) + "}");
			gb.set_label(gd.u_leaf(i, j), "u'_{" + idx(i, j) + "}");
			gb.add_edge(gd.u(i, j), gd.u_leaf(i, j));
			gb.add_edge(gd.u(i, j), gd.v(i));
		}
	}
	for (int l = 1; l <= t; ++l) {
		gb.set_label(gd.f_set(l), "f_" + std::to_string(l));
		const std::set<int> members(sc.family[l - 1].begin(), sc.family[l - 1].end());
		for (int j : members)
			for (int i = 1; i <= rows; ++i)
				gb.add_edge(gd.u(i, j), gd.f_set(l));
		gb.add_edge(gd.f(), gd.f_set(l));
	}
	gb.set_label(gd.x(), "x");
	for (int i = 1; i < rows; ++i)
		gb.add_edge(gd.x(), gd.u(i, 0));
	for (int i = 1; i <= rows; ++i) {
		gb.set_label(gd.v(i), "v_" + std::to_string(i));
		gb.add_edge(gd.y(), gd.v(i));
	}
	gb.set_label(gd.f(), "f");
	gb.set_label(gd.y(), "y");
	gb.add_edge(gd.f(), gd.x());
	gb.add_edge(gd.f(), gd.y());
	gd.g = gb.build();
	gd.reopt_edge = make_edge(gd.x(), gd.u(rows, 0));
	gd.c = rows * (sc.universe + 2);
	for (int i = 1; i <= rows; ++i) {
		for (int j = 0; j < cols; ++j)
			gd.s1.insert(gd.u(i, j));
		gd.s1.insert(gd.v(i));
	}
	gd.s1.insert(gd.f());
	gd.s1.insert(gd.y());
	return gd;
}

vertex_set s2_from_cover(const setcover_cvc_gadget &gd, const std::vector<int> &cover) {
	vertex_set s;
	for (int i = 1; i <= gd.rows(); ++i)
		for (int j = 0; j < gd.cols(); ++j)
			s.insert(gd.u(i, j));
	for (int l : cover) {
		if (l < 0 || l >= gd.sets())
			throw error(error_code::precondition_violated, "s2_from_cover: no set " + std::to_string(l));
		s.insert(gd.f_set(l + 1));
	}
	s.insert(gd.x());
	s.insert(gd.f());
	s.insert(gd.v(gd.rows()));
	s.insert(gd.y());
	return s;
}

std::vector<std::string> gadget_violations(const setcover_cvc_gadget &gd) {
	std::vector<std::string> out;
	const auto &g = gd.g;
	const int rows = gd.rows(), cols = gd.cols(), t = gd.sets(), k = gd.sc.k;
	const auto expect = [&](bool ok, const std::string &what) {
		if (!ok)
			out.push_back(what);
	};
	const auto total = static_cast<std::size_t>(2 * rows * cols + t + k + 5);
	if (g.vertex_count() != total) {
		out.push_back("vertex count " + std::to_string(g.vertex_count()) + " != " + std::to_string(total));
		return out;
	}
	expect(g.has_labels(), "labels missing");
	for (int i = 1; i <= rows; ++i) {
		for (int j = 0; j < cols; ++j) {
			const auto at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
			expect(g.has_edge(gd.u(i, j), gd.u_leaf(i, j)) && g.degree(gd.u_leaf(i, j)) == 1, "leaf of u" + at);
			for (int l = 1; l <= t; ++l) {
				const auto &fam = gd.sc.family[l - 1];
				const bool in = j >= 1 && std::find(fam.begin(), fam.end(), j) != fam.end();
				expect(g.has_edge(gd.u(i, j), gd.f_set(l)) == in, "u" + at + " ~ f_" + std::to_string(l));
			}
			expect(g.has_edge(gd.x(), gd.u(i, j)) == (j == 0 && i <= k + 1), "x ~ u" + at);
			for (int r = 1; r <= rows; ++r)
				expect(g.has_edge(gd.u(i, j), gd.v(r)) == (r == i), "u" + at + " ~ v_" + std::to_string(r));
		}
	}
	vertex_set fn(g.neighbors(gd.f()).begin(), g.neighbors(gd.f()).end());
	vertex_set want_f{gd.x(), gd.y()};
	for (int l = 1; l <= t; ++l)
		want_f.insert(gd.f_set(l));
	expect(fn == want_f, "N(f)");
	vertex_set yn(g.neighbors(gd.y()).begin(), g.neighbors(gd.y()).end());
	vertex_set want_y{gd.f()};
	for (int i = 1; i <= rows; ++i)
		want_y.insert(gd.v(i));
	expect(yn == want_y, "N(y)");
	expect(g.degree(gd.x()) == static_cast<std::size_t>(k + 2), "deg(x)");
	expect(!g.has_edge(gd.reopt_edge.u, gd.reopt_edge.v) && gd.reopt_edge == make_edge(gd.x(), gd.u(rows, 0)),
	       "reoptimization edge");
	expect(gd.c == rows * (gd.sc.universe + 2), "c");
	expect(gd.s1.size() == static_cast<std::size_t>(gd.c + 2), "|S1|");
	expect(is_connected_vertex_cover(g, gd.s1), "S1 not a connected vertex cover");
	return out;
}

}  // namespace reokern
