#include "reokern/reopt_framework.hpp"

#include <algorithm>
#include <map>

#include "reokern/error.hpp"
#include "reokern/oracles.hpp"

namespace reokern {

std::string_view to_string(monotonicity m) {
	switch (m) {
	case monotonicity::monotone:
		return "Monotone";
	case monotonicity::comonotone:
		return "Comonotone";
	case monotonicity::neither:
		break;
	}
	return "Neither";
}

std::string_view to_string(compositionality c) {
	switch (c) {
	case compositionality::or_comp:
		return "OrComp";
	case compositionality::and_comp:
		return "AndComp";
	case compositionality::neither:
		break;
	}
	return "Neither";
}

std::string_view to_string(dispatch_branch b) {
	switch (b) {
	case dispatch_branch::witness_yes:
		return "witness-yes";
	case dispatch_branch::witness_no:
		return "witness-absent-no";
	case dispatch_branch::environment:
		break;
	}
	return "environment";
}

problem_spec spec_for(problem_kind kind) {
	problem_spec s;
	s.name = std::string(to_string(kind));
	s.dir = direction_of(kind);
	s.kind = kind;
	s.verifier = [kind](const graph &g, int k, const solution &c) { return verify_solution(kind, g, k, c); };
	s.oracle = [kind](const graph &g, int k) { return is_member(kind, g, k); };
	switch (kind) {
	case problem_kind::ivst:
	case problem_kind::longest_path:
	case problem_kind::clique:
		s.mono = monotonicity::comonotone;
		s.comp = compositionality::or_comp;
		break;
	case problem_kind::treewidth:
		s.mono = monotonicity::monotone;
		s.comp = compositionality::and_comp;
		break;
	case problem_kind::vertex_cover:
		s.mono = monotonicity::monotone;
		break;
	case problem_kind::connected_vertex_cover:
		break;
	default:
		throw error(error_code::unsupported_problem, "spec_for: " + s.name);
	}
	return s;
}

namespace {

std::vector<std::size_t> component_edge_counts(const graph &g) {
	auto id = component_ids(g);
	std::size_t count = 0;
	for (auto c : id)
		count = std::max(count, c + 1);
	std::vector<std::size_t> edges(count, 0);
	for (const auto &e : g.edges())
		++edges[id[e.u]];
	return edges;
}

}  // namespace

namespace synthetic {

problem_spec small_component() {
	problem_spec s;
	s.name = "SmallComponent";
	s.dir = direction::min;
	s.mono = monotonicity::monotone;
	s.comp = compositionality::or_comp;
	s.vertex_modifications = false;
	s.oracle = [](const graph &g, int k) {
		for (auto m : component_edge_counts(g))
			if (static_cast<int>(m) <= k)
				return true;
		return false;
	};
	// Candidate: the vertices of one component.
	s.verifier = [](const graph &g, int k, const solution &c) {
		if (c.vertices.empty() || c.vertices.front() >= g.vertex_count())
			return false;
		auto comp = component_of(g, c.vertices.front());
		auto sorted = c.vertices;
		std::sort(sorted.begin(), sorted.end());
		return sorted == comp.to_parent && static_cast<int>(comp.g.edge_count()) <= k;
	};
	return s;
}

problem_spec large_components() {
	problem_spec s;
	s.name = "LargeComponents";
	s.dir = direction::max;
	s.mono = monotonicity::comonotone;
	s.comp = compositionality::and_comp;
	s.vertex_modifications = false;
	s.oracle = [](const graph &g, int k) {
		for (auto m : component_edge_counts(g))
			if (static_cast<int>(m) < k)
				return false;
		return true;
	};
	// No certificate beyond the graph itself.
	s.verifier = [oracle = s.oracle](const graph &g, int k, const solution &) { return oracle(g, k); };
	return s;
}

}  // namespace synthetic

component_kernelizer exact_component_kernelizer(const problem_spec &spec) {
	component_kernelizer ck;
	ck.name = "exact(" + spec.name + ")";
	ck.run = [oracle = spec.oracle](const graph &g, int k) {
		return oracle(g, k) ? kernel_result::yes() : kernel_result::no();
	};
	ck.size_bound = [](int) { return std::size_t{0}; };
	return ck;
}

std::vector<subgraph> environment(const graph &g_before, const local_modification &m) {
	check_modification(g_before, m);
	const graph after = apply_modification(g_before, m);
	std::vector<subgraph> out;
	std::visit(
		[&](const auto &mod) {
			using T = std::decay_t<decltype(mod)>;
			if constexpr (std::is_same_v<T, edge_add>) {
				out.push_back(component_of(after, mod.u));
			} else if constexpr (std::is_same_v<T, edge_del>) {
				auto id = component_ids(after);
				out.push_back(component_of(after, std::min(mod.u, mod.v)));
				if (id[mod.u] != id[mod.v])
					out.push_back(component_of(after, std::max(mod.u, mod.v)));
			} else if constexpr (std::is_same_v<T, vertex_add>) {
				out.push_back(component_of(after, static_cast<vertex>(g_before.vertex_count())));
			} else {
				auto id = component_ids(after);
				std::map<std::size_t, vertex> first;
				for (vertex w : g_before.neighbors(mod.v)) {
					const vertex shifted = w > mod.v ? w - 1 : w;
					first.emplace(id[shifted], shifted);
				}
				for (const auto &[cid, w] : first)
					out.push_back(component_of(after, w));
			}
		},
		m);
	return out;
}

bool supports_modification(const problem_spec &spec, const local_modification &m) {
	if (spec.mono == monotonicity::neither || spec.comp == compositionality::neither)
		return false;
	const bool vertex_mod = std::holds_alternative<vertex_add>(m) || std::holds_alternative<vertex_del>(m);
	if (vertex_mod && !spec.vertex_modifications)
		return false;
	const bool wants_deletion = (spec.comp == compositionality::or_comp) == (spec.mono == monotonicity::monotone);
	return is_addition(m) != wants_deletion;
}

kernel_result combine_kernels(composition_mode mode, const std::vector<kernel_result> &parts) {
	const bool absorbing = mode == composition_mode::or_mode;
	std::vector<const reduced *> rest;
	for (const auto &p : parts) {
		if (auto d = p.decision()) {
			if (*d == absorbing)
				return absorbing ? kernel_result::yes() : kernel_result::no();
		} else {
			rest.push_back(&p.as_reduced());
		}
	}
	if (rest.empty())
		return absorbing ? kernel_result::no() : kernel_result::yes();
	graph g = rest.front()->g;
	std::size_t bound = rest.front()->size_bound;
	const int parameter = rest.front()->parameter;
	for (std::size_t i = 1; i < rest.size(); ++i) {
		if (rest[i]->parameter != parameter)
			throw error(error_code::kernel_parameter_mismatch,
			            std::to_string(parameter) + " vs " + std::to_string(rest[i]->parameter));
		g = disjoint_union(g, rest[i]->g);
		bound += rest[i]->size_bound;
	}
	return kernel_result::reduce(std::move(g), parameter, bound);
}

dispatch_outcome compositional_reopt_dispatch(const reopt_instance &inst, const problem_spec &spec,
                                              const component_kernelizer &ck, const dispatch_options &opt) {
	if (!supports_modification(spec, inst.modification))
		throw error(error_code::spec_modification_mismatch,
		            spec.name + " (" + std::string(to_string(spec.comp)) + ", " + std::string(to_string(spec.mono)) +
		                ") with " + std::string(modification_name(inst.modification)));
	if (spec.kind && *spec.kind != inst.problem)
		throw error(error_code::precondition_violated, "instance problem differs from " + spec.name);
	if (inst.modified_k != inst.k)
		throw error(error_code::precondition_violated, "parameter must be unchanged");

	const auto mode = spec.comp == compositionality::or_comp ? composition_mode::or_mode : composition_mode::and_mode;
	if (mode == composition_mode::or_mode && inst.witness)
		return {kernel_result::yes(), dispatch_branch::witness_yes, 0};
	if (mode == composition_mode::and_mode && !inst.witness)
		return {kernel_result::no(), dispatch_branch::witness_no, 0};

	auto env = environment(inst.original, inst.modification);
	if (std::holds_alternative<vertex_del>(inst.modification) && env.size() > opt.vertex_del_component_bound)
		throw error(error_code::degree_too_high, std::to_string(env.size()) + " components > " +
		                                             std::to_string(opt.vertex_del_component_bound));
	std::vector<kernel_result> parts;
	for (const auto &c : env)
		parts.push_back(ck.run(c.g, inst.k));
	return {combine_kernels(mode, parts), dispatch_branch::environment, env.size()};
}

kernel_result compositional_reopt_kernelize(const reopt_instance &inst, const problem_spec &spec,
                                            const component_kernelizer &ck, const dispatch_options &opt) {
	return compositional_reopt_dispatch(inst, spec, ck, opt).result;
}

reduced canonical_ivst_yes(int k) {
	const auto len = static_cast<std::size_t>(std::max(k, 0)) + 2;
	return {graphs::path(len), k, len};
}

namespace {

int internal_vertices(const solution &tree) {
	std::map<vertex, int> deg;
	for (const auto &e : tree.edges) {
		++deg[e.u];
		++deg[e.v];
	}
	int internal = 0;
	for (const auto &[v, d] : deg)
		internal += d >= 2;
	return internal;
}

}  // namespace

kernel_result ivst_reopt_kernelize_eplus(const reopt_instance &inst, const component_kernelizer &ck,
                                         const ivst_options &opt) {
	if (inst.problem != problem_kind::ivst)
		throw error(error_code::unsupported_problem, std::string(to_string(inst.problem)));
	const auto *add = std::get_if<edge_add>(&inst.modification);
	if (!add)
		throw error(error_code::spec_modification_mismatch,
		            "IVST needs EdgeAdd, got " + std::string(modification_name(inst.modification)));
	if (inst.modified_k != inst.k)
		throw error(error_code::precondition_violated, "parameter must be unchanged");

	const auto yes = [&] {
		return opt.materialize_yes ? kernel_result{canonical_ivst_yes(inst.k)} : kernel_result::yes();
	};
	if (opt.original_kernel) {
		if (opt.original_kernel->decision() == true)
			return yes();
	} else if (inst.witness && internal_vertices(*inst.witness) >= inst.k) {
		return yes();
	}

	auto env = environment(inst.original, inst.modification);
	auto r = ck.run(env.front().g, inst.k);
	if (opt.original_kernel && opt.original_kernel->is_reduced())
		r = combine_kernels(composition_mode::or_mode, {*opt.original_kernel, r});
	if (r.decision() == true)
		return yes();
	return r;
}

void for_each_graph(std::size_t n, const std::function<void(const graph &)> &fn) {
	if (n > 8)
		throw error(error_code::size_guard_exceeded, "for_each_graph: n = " + std::to_string(n));
	std::vector<edge> slots;
	for (vertex a = 0; a < n; ++a)
		for (vertex b = a + 1; b < n; ++b)
			slots.push_back({a, b});
	const std::uint64_t total = std::uint64_t{1} << slots.size();
	for (std::uint64_t mask = 0; mask < total; ++mask) {
		std::vector<edge> edges;
		for (std::size_t i = 0; i < slots.size(); ++i)
			if (mask >> i & 1)
				edges.push_back(slots[i]);
		fn(graph(n, std::move(edges)));
	}
}

std::optional<composition_counterexample> check_composition(const problem_spec &spec, composition_mode mode,
                                                            std::size_t size_bound) {
	std::vector<graph> pool;
	for (std::size_t n = 1; n <= size_bound; ++n)
		for_each_graph(n, [&](const graph &g) { pool.push_back(g); });
	const int kmax = static_cast<int>(size_bound);
	std::vector<std::vector<char>> member(pool.size());
	for (std::size_t i = 0; i < pool.size(); ++i)
		for (int k = 0; k <= kmax; ++k)
			member[i].push_back(spec.oracle(pool[i], k));
	for (std::size_t i = 0; i < pool.size(); ++i) {
		for (std::size_t j = 0; j < pool.size(); ++j) {
			const graph u = disjoint_union(pool[i], pool[j]);
			for (int k = 0; k <= kmax; ++k) {
				const bool a = member[i][k], b = member[j][k];
				const bool expect = mode == composition_mode::or_mode ? (a || b) : (a && b);
				if (spec.oracle(u, k) != expect)
					return composition_counterexample{pool[i], pool[j], k};
			}
		}
	}
	return std::nullopt;
}

std::optional<closure_counterexample> check_closure(const problem_spec &spec, std::size_t size_bound) {
	if (spec.mono == monotonicity::neither)
		throw error(error_code::precondition_violated, spec.name + " has no closure property");
	const bool deletions = spec.mono == monotonicity::monotone;
	std::optional<closure_counterexample> found;
	for (std::size_t n = 1; n <= size_bound && !found; ++n) {
		for_each_graph(n, [&](const graph &g) {
			if (found)
				return;
			std::vector<local_modification> mods;
			for (vertex a = 0; a < n; ++a) {
				for (vertex b = a + 1; b < n; ++b) {
					if (g.has_edge(a, b) == deletions)
						mods.push_back(deletions ? local_modification{edge_del{a, b}} : edge_add{a, b});
				}
			}
			if (spec.vertex_modifications) {
				if (deletions) {
					for (vertex v = 0; v < n; ++v)
						mods.push_back(vertex_del{v});
				} else {
					for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
						vertex_add va;
						for (vertex v = 0; v < n; ++v)
							if (mask >> v & 1)
								va.neighbors.push_back(v);
						mods.push_back(va);
					}
				}
			}
			for (int k = 0; k <= static_cast<int>(size_bound) && !found; ++k) {
				if (!spec.oracle(g, k))
					continue;
				for (const auto &m : mods) {
					if (!spec.oracle(apply_modification(g, m), k)) {
						found = closure_counterexample{g, m, k};
						break;
					}
				}
			}
		});
	}
	return found;
}

}  // namespace reokern
