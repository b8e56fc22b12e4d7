// One PASS/FAIL line per acceptance criterion. Usage: acceptance [N ...]
// to run only the listed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph_zoo.hpp"
#include "reokern/crown.hpp"
#include "reokern/error.hpp"
#include "reokern/gadgets.hpp"
#include "reokern/oracles.hpp"
#include "reokern/reopt_framework.hpp"
#include "reokern/vc_kernels.hpp"

using namespace reokern;
#ifndef DISPATCH_N
#define DISPATCH_N 8
#endif

using clock_type = std::chrono::steady_clock;

namespace {

struct verdict {
	bool pass = true;
	std::string detail;
	long failures = 0;
	long checked = 0;

	void check(bool ok, const std::string &what = {}) {
		++checked;
		if (ok)
			return;
		++failures;
		pass = false;
		if (failures <= 3 && !what.empty())
			detail += (detail.empty() ? "" : "; ") + what;
	}
};

struct criterion {
	int id;
	std::string title;
	// 0 = no time limit.
	double limit_seconds;
	std::function<void(verdict &)> run;
};

std::string show(const graph &g) {
	std::ostringstream os;
	os << "n=" << g.vertex_count() << " E={";
	bool first = true;
	for (const auto &e : g.edges()) {
		os << (first ? "" : ",") << e.u << "-" << e.v;
		first = false;
	}
	os << "}";
	return os.str();
}

bool member_from_value(problem_kind kind, const exact_solution &s, int k) {
	if (!s.feasible)
		return false;
	return direction_of(kind) == direction::min ? s.value <= k : s.value >= k;
}

// 1. Crown lemma dichotomy.
void crown_dichotomy(verdict &v) {
	std::mt19937_64 rng(101);
	for (int round = 0; round < 500; ++round) {
		const std::size_t n = 4 + rng() % 11;
		const graph g = testing::random_graph_no_isolated(rng, n, 0.05 + 0.5 * (rng() % 100) / 100.0);
		const int k = static_cast<int>(rng() % ((n - 1) / 3 + 1));
		auto r = crown_or_matching(g, k);
		if (auto *bm = std::get_if<big_matching>(&r)) {
			bool ok = bm->m.size() == static_cast<std::size_t>(k + 1);
			std::set<vertex> used;
			for (const auto &e : bm->m.edges()) {
				ok = ok && g.has_edge(e.u, e.v) && used.insert(e.u).second && used.insert(e.v).second;
			}
			v.check(ok, "bad matching on " + show(g));
		} else {
			auto bad = validate_crown(g, std::get<crown_decomposition>(r));
			v.check(bad.empty(), "invalid crown on " + show(g) + ": " +
			                         (bad.empty() ? "" : std::string(to_string(bad.front().kind))));
		}
	}
}

// 2. Classic 3k kernel.
void classic_kernel(verdict &v) {
	auto one = [&](const graph &g, int k) {
		auto r = vc_kernelize_3k(g, k);
		v.check(r.is_decided() || r.size() <= static_cast<std::size_t>(3 * std::max(k, 0)),
		        "size " + std::to_string(r.size()) + " > 3k on " + show(g));
		v.check(verify_kernel_equivalence(problem_kind::vertex_cover, g, k, r),
		        "not equivalent on " + show(g) + " k=" + std::to_string(k));
	};
	// every labeled graph for k <= 4, since the kernel depends on vertex
	// order; every k on one graph per isomorphism class
	for (std::size_t n = 0; n <= 7; ++n) {
		testing::for_each_labeled_graph(n, [&](const graph &g) {
			for (int k = 0; k <= std::min(static_cast<int>(n), 4); ++k)
				one(g, k);
		});
		for (const auto &g : testing::nonisomorphic_graphs(n))
			for (int k = 0; k <= static_cast<int>(n); ++k)
				one(g, k);
	}
	std::mt19937_64 rng(202);
	for (int round = 0; round < 1000; ++round) {
		const std::size_t n = 1 + rng() % 14;
		const graph g = testing::random_graph(rng, n, 0.05 + 0.4 * (rng() % 100) / 100.0);
		one(g, static_cast<int>(rng() % (n + 1)));
	}
}

// 3. Reoptimization 2k kernel.
void reopt_kernel(verdict &v) {
	std::ofstream log("case5_degenerate.log");
	long degenerate = 0;
	std::map<std::string, long> per_branch;
	auto sweep = [&](const graph &g) {
			for (const auto &a : all_minimum_vertex_covers(g)) {
				auto p = build_reopt_partition(g, a);
				for (const auto &cd : {p.cd1(), p.cd2()})
					if (!cd.crown.empty())
						v.check(validate_crown(g, cd).empty(), "partition crown invalid on " + show(g));
				for (const auto &e : testing::absent_edges(g)) {
					const int k = static_cast<int>(a.size());
					reopt_instance inst{problem_kind::vertex_cover, g, k, vertex_solution(a), edge_add{e.u, e.v}, k};
					reopt_vc_outcome out;
					try {
						out = reopt_vc_kernelize_2k_traced(inst);
					} catch (const error &err) {
						v.check(false, std::string("threw ") + err.what() + " on " + show(g));
						continue;
					}
					const auto branch = out.trace.final_branch();
					++per_branch[std::string(to_string(branch))];
					const graph gplus = inst.modified_graph();
					v.check(verify_kernel_equivalence(problem_kind::vertex_cover, gplus, k, out.result),
					        "not equivalent on " + show(g) + " +" + std::to_string(e.u) + "-" + std::to_string(e.v));
					const std::size_t size = out.result.size();
					if (branch == reopt_vc_branch::case5_degenerate) {
						++degenerate;
						log << show(g) << " A={";
						bool first = true;
						for (vertex x : a) {
							log << (first ? "" : ",") << x;
							first = false;
						}
						log << "} e=" << e.u << "-" << e.v << " k=" << k << " size=" << size << "\n";
						v.check(size <= static_cast<std::size_t>(2 * k + 1),
						        "degenerate Case 5 size " + std::to_string(size) + " on " + show(g));
					} else {
						v.check(size <= static_cast<std::size_t>(2 * k),
						        std::string(to_string(branch)) + " size " + std::to_string(size) + " > 2k on " +
						            show(g));
					}
					if (out.trace.crown)
						v.check(validate_crown(out.trace.working, *out.trace.crown).empty(),
						        "kernel crown invalid on " + show(g));
				}
			}
	};
	// labeled graphs up to 6 vertices, isomorphism classes on 7
	for (std::size_t n = 2; n <= 6; ++n)
		testing::for_each_labeled_graph(n, sweep);
	for (const auto &g : testing::nonisomorphic_graphs(7))
		sweep(g);
	std::string branches;
	for (const auto &[name, count] : per_branch)
		branches += (branches.empty() ? "" : ", ") + name + ": " + std::to_string(count);
	v.detail += (v.detail.empty() ? "" : "; ") + std::string("branches {") + branches + "}, degenerate Case 5 logged " +
	            std::to_string(degenerate) + " times to case5_degenerate.log";
}

// 4. Compositional dispatch against the oracle.
void dispatch(verdict &v) {
	struct entry {
		problem_spec spec;
		std::size_t max_n;
	};
	std::vector<entry> specs{
		{spec_for(problem_kind::longest_path), DISPATCH_N},
		{spec_for(problem_kind::ivst), DISPATCH_N},
		{spec_for(problem_kind::treewidth), DISPATCH_N},
		{synthetic::small_component(), DISPATCH_N},
		{synthetic::large_components(), DISPATCH_N},
	};
	std::map<std::string, long> combos;
	for (const auto &[spec, max_n] : specs) {
		const auto ck = exact_component_kernelizer(spec);
		const auto kind = spec.kind.value_or(problem_kind::vertex_cover);
		for (std::size_t n = 0; n <= max_n; ++n) {
			for (const auto &g : testing::nonisomorphic_graphs(n)) {
				std::optional<exact_solution> before;
				if (spec.kind)
					before = solve_exact(kind, g);
				for (const auto &m : testing::all_modifications(g)) {
					if (!supports_modification(spec, m))
						continue;
					const graph after = apply_modification(g, m);
					std::optional<exact_solution> after_opt;
					if (spec.kind)
						after_opt = solve_exact(kind, after);
					const std::string combo = std::string(to_string(spec.comp)) + "+" +
					                          std::string(to_string(spec.mono)) + "/" +
					                          std::string(modification_name(m));
					for (int k = 0; k <= static_cast<int>(n) + 1; ++k) {
						const bool yes_before = spec.kind ? member_from_value(kind, *before, k) : spec.oracle(g, k);
						const bool truth = spec.kind ? member_from_value(kind, *after_opt, k) : spec.oracle(after, k);
						std::optional<solution> w;
						if (yes_before)
							w = spec.kind ? before->witness : solution{};
						reopt_instance inst{kind, g, k, w, m, k};
						kernel_result r;
						try {
							r = compositional_reopt_kernelize(inst, spec, ck);
						} catch (const error &err) {
							v.check(false, spec.name + " threw " + err.what() + " on " + show(g));
							continue;
						}
						v.check(r.is_decided() && *r.decision() == truth,
						        spec.name + " " + std::string(modification_name(m)) + " k=" + std::to_string(k) +
						            " on " + show(g));
						++combos[combo];
					}
				}
			}
		}
	}
	std::string s;
	for (const auto &[name, count] : combos)
		s += (s.empty() ? "" : ", ") + name + ": " + std::to_string(count);
	v.detail += (v.detail.empty() ? "" : "; ") + s;
}

// 5. e+ IVST kernel.
void ivst_eplus(verdict &v) {
	const auto spec = spec_for(problem_kind::ivst);
	const auto ck = exact_component_kernelizer(spec);
	std::mt19937_64 rng(505);
	int built = 0;
	while (built < 300) {
		const std::size_t n = 2 + rng() % 9;
		const graph g = testing::random_graph(rng, n, 0.1 + 0.4 * (rng() % 100) / 100.0);
		const auto absent = testing::absent_edges(g);
		if (absent.empty())
			continue;
		const auto opt = solve_ivst(g);
		const int k = opt.value + 1 + static_cast<int>(rng() % 2);
		// witness absent: confirmed no-instance
		if (is_member(problem_kind::ivst, g, k))
			continue;
		const auto e = absent[rng() % absent.size()];
		reopt_instance inst{problem_kind::ivst, g, k, std::nullopt, edge_add{e.u, e.v}, k};
		auto r = ivst_reopt_kernelize_eplus(inst, ck);
		v.check(verify_kernel_equivalence(problem_kind::ivst, inst.modified_graph(), k, r),
		        "disagrees on " + show(g) + " +" + std::to_string(e.u) + "-" + std::to_string(e.v));
		++built;
	}
	// Witness branch on a graph the modification does not even fit.
	int calls = 0;
	component_kernelizer counting{"counting", [&](const graph &, int) {
		                              ++calls;
		                              return kernel_result::no();
	                              },
	                              [](int) { return std::size_t{0}; }};
	const graph p4 = graphs::path(4);
	solution tree{{}, {{0, 1}, {1, 2}, {2, 3}}};
	reopt_instance witnessed{problem_kind::ivst, p4, 2, tree, edge_add{17, 23}, 2};
	kernel_result r;
	try {
		r = ivst_reopt_kernelize_eplus(witnessed, counting);
	} catch (const error &err) {
		v.check(false, std::string("witness branch threw ") + err.what());
		return;
	}
	v.check(r == kernel_result::yes() && calls == 0, "witness branch touched the graph");
}

// 6. Compositionality definitions.
void composition(verdict &v) {
	for (auto kind : {problem_kind::ivst, problem_kind::clique, problem_kind::longest_path})
		v.check(!check_composition(spec_for(kind), composition_mode::or_mode, 4),
		        std::string(to_string(kind)) + " OR counterexample");
	v.check(!check_composition(spec_for(problem_kind::treewidth), composition_mode::and_mode, 4),
	        "Treewidth AND counterexample");
	auto ce = check_composition(spec_for(problem_kind::longest_path), composition_mode::and_mode, 4);
	v.check(ce.has_value(), "no LongestPath AND counterexample");
	if (ce) {
		const auto spec = spec_for(problem_kind::longest_path);
		const bool lhs = spec.oracle(disjoint_union(ce->g1, ce->g2), ce->k);
		const bool rhs = spec.oracle(ce->g1, ce->k) && spec.oracle(ce->g2, ce->k);
		v.check(lhs != rhs, "reported LongestPath AND counterexample is not one");
		v.detail += (v.detail.empty() ? "" : "; ") + std::string("LongestPath AND counterexample ") + show(ce->g1) +
		            " + " + show(ce->g2) + " k=" + std::to_string(ce->k);
	}
}

// 7. Extremal constructors.
void extremal(verdict &v) {
	for (int k = 1; k <= 5; ++k) {
		v.check(is_extremal(std::get<graph>(build_extremal(problem_kind::ivst, k)), problem_kind::ivst, k,
		                    extremal_mode::minimal_yes),
		        "IVST k=" + std::to_string(k));
		v.check(is_extremal(std::get<graph>(build_extremal(problem_kind::clique, k)), problem_kind::clique, k,
		                    extremal_mode::minimal_yes),
		        "Clique k=" + std::to_string(k));
	}
	for (int k = 1; k <= 3; ++k)
		v.check(is_extremal(std::get<graph>(build_extremal(problem_kind::treewidth, k)), problem_kind::treewidth, k,
		                    extremal_mode::minimal_yes),
		        "Treewidth k=" + std::to_string(k));
}

// 8. Negative-instance builders.
void negative(verdict &v) {
	oracle_limits lim = default_limits();
	lim.ivst_vertices = 16;
	for (auto problem : {problem_kind::longest_path, problem_kind::ivst, problem_kind::clique, problem_kind::treewidth}) {
		// treewidth blocks K_{k+2} must fit the n <= 12 guard next to g
		const std::size_t max_n = problem == problem_kind::treewidth ? 6 : 8;
		const int max_k = problem == problem_kind::treewidth ? 4 : 6;
		for (std::size_t n = 0; n <= max_n; ++n) {
			for (const auto &g : testing::nonisomorphic_graphs(n)) {
				const auto opt = solve_exact(problem, g, lim);
				for (int k = 0; k <= max_k; ++k) {
					const bool truth = member_from_value(problem, opt, k);
					for (auto removal : {removal_kind::edge, removal_kind::vertex}) {
						reopt_instance inst;
						try {
							inst = build_negative_reopt_instance(problem, g, k, removal);
						} catch (const error &e) {
							// k too small to delete anything
							v.check(e.code() == error_code::precondition_violated,
							        std::string("unexpected ") + e.what());
							continue;
						}
						if (inst.witness)
							v.check(verify_solution(problem, inst.original, inst.k, *inst.witness),
							        "witness invalid for " + std::string(to_string(problem)));
						v.check(is_member(inst, lim) == truth, std::string(to_string(problem)) + " k=" +
						                                           std::to_string(k) + " on " + show(g));
					}
				}
			}
		}
	}
	for (std::size_t n = 0; n <= 6; ++n)
		for (const auto &g : testing::nonisomorphic_graphs(n)) {
			const auto opt = solve_clique(g);
			for (int k = 0; k <= 4; ++k)
				for (auto mode : {clique_mode::edge_add, clique_mode::vertex_add}) {
					auto inst = build_clique_reopt_instance(g, k, mode);
					v.check(verify_solution(problem_kind::clique, inst.original, inst.k, *inst.witness),
					        "clique builder witness invalid");
					v.check(is_member(inst) == member_from_value(problem_kind::clique, opt, k),
					        "clique builder k=" + std::to_string(k) + " on " + show(g));
				}
		}
}

// Calls f on every family of t subsets of {1..u} (as a multiset).
void for_each_family(int u, int t, const std::function<void(const std::vector<std::vector<int>> &)> &f) {
	const int subsets = 1 << u;
	std::vector<int> pick(t, 0);
	while (true) {
		std::vector<std::vector<int>> fam;
		for (int m : pick) {
			std::vector<int> s;
			for (int e = 1; e <= u; ++e)
				if (m >> (e - 1) & 1)
					s.push_back(e);
			fam.push_back(s);
		}
		f(fam);
		int i = t - 1;
		while (i >= 0 && pick[i] == subsets - 1)
			--i;
		if (i < 0)
			return;
		++pick[i];
		for (int j = i + 1; j < t; ++j)
			pick[j] = pick[i];
	}
}

// 9. Set Cover to CVC gadget.
void setcover_gadget(verdict &v) {
	long equivalences = 0;
	for (int u = 1; u <= 3; ++u)
		for (int t = 0; t <= 3; ++t)
			for_each_family(u, t, [&](const std::vector<std::vector<int>> &fam) {
				for (int k = 0; k <= u; ++k) {
					set_cover_instance sc{u, fam, k};
					const auto gd = build_setcover_cvc(sc);
					const auto bad = gadget_violations(gd);
					v.check(bad.empty(), bad.empty() ? "" : bad.front());
					v.check(static_cast<int>(gd.s1.size()) == (k + 2) * (u + 2) + 2, "|S1| wrong");
					const auto opt = solve_set_cover(sc);
					const bool has_cover = opt.feasible && opt.value <= k;
					if (has_cover) {
						std::vector<int> cover(opt.witness.vertices.begin(), opt.witness.vertices.end());
						auto s2 = s2_from_cover(gd, cover);
						s2.erase(gd.v(gd.rows()));
						v.check(is_connected_vertex_cover(gd.modified_graph(), s2), "S2 - v_{k+2} not a CVC");
					}
					if (u <= 2 && t <= 2) {
						const auto cvc = solve_connected_vertex_cover(gd.modified_graph());
						v.check((cvc.feasible && cvc.value <= gd.c + 1) == has_cover,
						        "CVC/SC disagree u=" + std::to_string(u) + " t=" + std::to_string(t) +
						            " k=" + std::to_string(k));
						++equivalences;
					}
				}
			});
	v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(equivalences) + " CVC equivalence checks";
}

// 10. Oracle self-consistency.
void oracle_consistency(verdict &v) {
	std::mt19937_64 rng(1010);
	const problem_kind kinds[] = {problem_kind::vertex_cover, problem_kind::connected_vertex_cover,
	                              problem_kind::ivst,         problem_kind::longest_path,
	                              problem_kind::clique,       problem_kind::treewidth};
	for (int round = 0; round < 300; ++round) {
		const std::size_t n = 1 + rng() % 10;
		const graph g = testing::random_graph(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
		for (auto kind : kinds) {
			const auto s = solve_exact(kind, g);
			if (!s.feasible)
				continue;
			v.check(verify_solution(kind, g, s.value, s.witness),
			        std::string(to_string(kind)) + " witness fails on " + show(g));
		}
	}
	for (int round = 0; round < 100; ++round) {
		set_cover_instance sc{1 + static_cast<int>(rng() % 6), {}, 0};
		const int t = 1 + static_cast<int>(rng() % 6);
		for (int l = 0; l < t; ++l) {
			std::vector<int> s;
			for (int e = 1; e <= sc.universe; ++e)
				if (rng() % 2)
					s.push_back(e);
			sc.family.push_back(s);
		}
		const auto s = solve_set_cover(sc);
		if (!s.feasible)
			continue;
		sc.k = std::min(s.value, sc.universe);
		v.check(verify_solution(sc, s.witness), "set cover witness fails");
	}
	for (int round = 0; round < 100; ++round) {
		const std::size_t n = 1 + rng() % 7;
		std::vector<digraph::arc> arcs;
		for (vertex a = 0; a < n; ++a)
			for (vertex b = 0; b < n; ++b)
				if (a != b && arcs.size() < 14 && rng() % 4 == 0)
					arcs.push_back({a, b});
		const digraph d(n, arcs);
		const auto s = solve_leaf_out_tree(d);
		v.check(verify_solution(d, s.value, s.witness), "leaf out tree witness fails");
	}
	// CVC >= VC on connected graphs
	for (std::size_t n = 1; n <= 7; ++n)
		for (const auto &g : testing::nonisomorphic_graphs(n))
			if (is_connected(g))
				v.check(solve_connected_vertex_cover(g).value >= solve_vertex_cover(g).value, "CVC < VC on " + show(g));
	int connected = 0;
	while (connected < 300) {
		const std::size_t n = 8 + rng() % 3;
		const graph g = testing::random_graph(rng, n, 0.2 + 0.4 * (rng() % 100) / 100.0);
		if (!is_connected(g))
			continue;
		++connected;
		v.check(solve_connected_vertex_cover(g).value >= solve_vertex_cover(g).value, "CVC < VC on " + show(g));
	}
	// VC never decreases under edge addition
	for (std::size_t n = 0; n <= 6; ++n)
		testing::for_each_labeled_graph(n, [&](const graph &g) {
			const int base = solve_vertex_cover(g).value;
			for (const auto &e : testing::absent_edges(g))
				v.check(solve_vertex_cover(apply_modification(g, edge_add{e.u, e.v})).value >= base,
				        "VC decreased on " + show(g));
		});
}

}  // namespace

int main(int argc, char **argv) {
	const std::vector<criterion> criteria{
		{1, "crown lemma dichotomy (500 random graphs)", 10, crown_dichotomy},
		{2, "classic 3k kernel (all n <= 7, 1000 random n <= 14)", 120, classic_kernel},
		{3, "reoptimization 2k kernel (all n <= 7, minimum covers, absent edges)", 600, reopt_kernel},
		{4, "compositional dispatch agrees with the oracle (n <= 8)", 0, dispatch},
		{5, "e+ IVST kernel (300 random n <= 10, witness branch)", 0, ivst_eplus},
		{6, "compositionality checks (pairs up to 4 vertices)", 0, composition},
		{7, "extremal constructors", 0, extremal},
		{8, "negative-instance builders", 0, negative},
		{9, "set cover to connected vertex cover gadget (u, t <= 3)", 900, setcover_gadget},
		{10, "oracle self-consistency", 0, oracle_consistency},
	};
	std::set<int> only;
	for (int i = 1; i < argc; ++i)
		only.insert(std::stoi(argv[i]));

	bool all = true;
	for (const auto &c : criteria) {
		if (!only.empty() && !only.count(c.id))
			continue;
		verdict v;
		const auto start = clock_type::now();
		try {
			c.run(v);
		} catch (const std::exception &e) {
			v.pass = false;
			v.detail += (v.detail.empty() ? "" : "; ") + std::string("aborted: ") + e.what();
		}
		const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
		std::string timing;
		if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
			v.pass = false;
			timing = " over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
		}
		all = all && v.pass;
		std::printf("criterion %2d: %s  %s [%ld checks, %ld failures, %.1f s%s]%s%s\n", c.id, v.pass ? "PASS" : "FAIL",
		            c.title.c_str(), v.checked, v.failures, secs, timing.c_str(), v.detail.empty() ? "" : " ",
		            v.detail.c_str());
		std::fflush(stdout);
	}
	return all ? 0 : 1;
}
