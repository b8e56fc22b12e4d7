#include "reokern/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "io_json.hpp"
#include "reokern/crown.hpp"
#include "reokern/error.hpp"
#include "reokern/gadgets.hpp"
#include "reokern/io.hpp"
#include "reokern/oracles.hpp"
#include "reokern/reopt_framework.hpp"
#include "reokern/vc_kernels.hpp"

namespace reokern {

namespace {

using detail::json;
namespace fs = std::filesystem;

struct usage_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string read_all(std::istream &is) {
	std::ostringstream ss;
	ss << is.rdbuf();
	return ss.str();
}

std::string read_input(const std::string &path, std::istream &in) {
	if (path.empty() || path == "-")
		return read_all(in);
	std::ifstream f(path);
	if (!f)
		throw usage_error("cannot read " + path);
	return read_all(f);
}

void write_file(const fs::path &path, const std::string &text) {
	std::ofstream f(path);
	if (!f)
		throw usage_error("cannot write " + path.string());
	f << text;
}

template <class T>
const T &require(const std::optional<T> &v, const char *field) {
	if (!v)
		throw error(error_code::parse_error, std::string("document needs '") + field + "'");
	return *v;
}

problem_kind problem_from(const std::string &flag, const instance_document &doc) {
	if (!flag.empty()) {
		auto p = parse_problem_kind(flag);
		if (!p)
			throw usage_error("unknown problem '" + flag + "'");
		return *p;
	}
	return require(doc.problem, "problem");
}

json solution_json(const solution &s) {
	json v = json::array(), e = json::array();
	for (auto x : s.vertices)
		v.push_back(x);
	for (const auto &p : s.edges)
		e.push_back({p.u, p.v});
	return {{"vertices", v}, {"edges", e}};
}

json kernel_json(problem_kind kind, const kernel_result &r) {
	if (auto d = r.decision())
		return {{"kind", "Decided"}, {"answer", *d}};
	const auto &red = r.as_reduced();
	instance_document doc;
	doc.problem = kind;
	doc.g = red.g;
	doc.k = red.parameter;
	return {{"kind", "Reduced"},
	        {"parameter", red.parameter},
	        {"size_bound", red.size_bound},
	        {"instance", detail::document_to_json(doc)}};
}

kernel_result kernel_from_json(const json &report) {
	const json &j = report.contains("result") ? report["result"] : report;
	if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
		throw error(error_code::parse_error, "kernel document needs 'kind'");
	const auto kind = j["kind"].get<std::string>();
	if (kind == "Decided") {
		if (!j.contains("answer") || !j["answer"].is_boolean())
			throw error(error_code::parse_error, "field 'answer': expected a boolean");
		return j["answer"].get<bool>() ? kernel_result::yes() : kernel_result::no();
	}
	if (kind != "Reduced" || !j.contains("instance"))
		throw error(error_code::parse_error, "field 'kind': expected Decided or Reduced with an instance");
	auto doc = detail::document_from_json(j["instance"]);
	const int parameter = require(doc.k, "instance.k");
	const std::size_t bound = j.contains("size_bound") && j["size_bound"].is_number_unsigned()
	                              ? j["size_bound"].get<std::size_t>()
	                              : doc.g.vertex_count();
	return kernel_result::reduce(doc.g, parameter, bound);
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

reopt_instance reopt_from(const instance_document &doc, problem_kind kind) {
	reopt_instance inst;
	inst.problem = kind;
	inst.original = doc.g;
	inst.k = require(doc.k, "k");
	inst.witness = doc.witness;
	inst.modification = require(doc.modification, "modification");
	inst.modified_k = doc.k_prime.value_or(inst.k);
	return inst;
}

instance_document reopt_document(const reopt_instance &inst) {
	instance_document doc;
	doc.problem = inst.problem;
	doc.g = inst.original;
	doc.k = inst.k;
	doc.witness = inst.witness;
	doc.modification = inst.modification;
	doc.k_prime = inst.modified_k;
	return doc;
}

json kernelize_vc(const instance_document &doc, const std::string &mode) {
	json report;
	report["command"] = "kernelize vc";
	report["mode"] = mode;
	if (mode == "classic3k") {
		const int k = require(doc.k, "k");
		auto r = vc_kernelize_3k(doc.g, k);
		report["result"] = kernel_json(problem_kind::vertex_cover, r);
		return report;
	}
	auto out = reopt_vc_kernelize_2k_traced(reopt_from(doc, problem_kind::vertex_cover));
	json branches = json::array();
	for (auto b : out.trace.branches)
		branches.push_back(to_string(b));
	report["case"] = to_string(out.trace.final_branch());
	report["branches"] = branches;
	report["branch_size_bound"] = out.trace.size_bound;
	report["result"] = kernel_json(problem_kind::vertex_cover, out.result);
	return report;
}

json equivalence_report(const instance_document &doc, const kernel_result &kernel) {
	const auto kind = doc.problem.value_or(problem_kind::vertex_cover);
	graph g = doc.g;
	int k = require(doc.k, "k");
	if (doc.modification) {
		check_modification(g, *doc.modification);
		g = apply_modification(g, *doc.modification);
		k = doc.k_prime.value_or(k);
	}
	return {{"problem", to_string(kind)}, {"equivalent", verify_kernel_equivalence(kind, g, k, kernel)}};
}

graph random_graph(std::mt19937_64 &rng, std::size_t n, unsigned percent) {
	std::vector<edge> edges;
	for (vertex a = 0; a < n; ++a)
		for (vertex b = a + 1; b < n; ++b)
			if (rng() % 100 < percent)
				edges.push_back({a, b});
	return graph(n, std::move(edges));
}

// Alternates classic (even) and reoptimization (odd) vertex cover instances.
json make_corpus(std::uint64_t seed, int count, const fs::path &dir) {
	fs::create_directories(dir);
	std::mt19937_64 rng(seed);
	json files = json::array();
	for (int i = 0; i < count; ++i) {
		instance_document doc;
		doc.problem = problem_kind::vertex_cover;
		std::string mode;
		if (i % 2 == 0) {
			const std::size_t n = 3 + rng() % 10;
			doc.g = random_graph(rng, n, 15 + rng() % 40);
			doc.k = static_cast<int>(rng() % (n / 2 + 2));
			mode = "classic3k";
		} else {
			std::vector<edge> absent;
			while (absent.empty()) {
				const std::size_t n = 3 + rng() % 8;
				doc.g = random_graph(rng, n, 20 + rng() % 40);
				absent.clear();
				for (vertex a = 0; a < n; ++a)
					for (vertex b = a + 1; b < n; ++b)
						if (!doc.g.has_edge(a, b))
							absent.push_back({a, b});
			}
			auto vc = solve_vertex_cover(doc.g);
			const auto e = absent[rng() % absent.size()];
			doc.k = vc.value;
			doc.k_prime = vc.value - static_cast<int>(rng() % 2);
			doc.witness = vc.witness;
			doc.modification = edge_add{e.u, e.v};
			mode = "reopt2k";
		}
		char stem[32];
		std::snprintf(stem, sizeof stem, "%04d", i);
		write_file(dir / (std::string(stem) + ".instance.json"), emit_instance(doc));
		write_file(dir / (std::string(stem) + ".kernel.json"), dump(kernelize_vc(doc, mode)));
		files.push_back({{"name", stem}, {"mode", mode}});
	}
	return {{"command", "corpus"}, {"seed", seed}, {"count", count}, {"files", files}};
}

int status_for(error_code c) {
	switch (c) {
	case error_code::parse_error: return exit_usage;
	case error_code::size_guard_exceeded:
	case error_code::oracle_too_slow: return exit_size_guard;
	case error_code::internal_invariant_broken: return exit_failure;
	default: return exit_invalid;
	}
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
	CLI::App app{"Kernelization and reoptimization toolkit", "reokern"};
	app.require_subcommand(1);
	std::string input = "-";
	const auto add_input = [&](CLI::App *sub) {
		sub->add_option("-i,--input", input, "instance document (JSON or DIMACS), '-' for stdin");
	};

	auto *kernelize = app.add_subcommand("kernelize", "kernelize an instance");
	kernelize->require_subcommand(1);
	auto *kvc = kernelize->add_subcommand("vc", "vertex cover kernels");
	std::string vc_mode;
	kvc->add_option("--mode", vc_mode, "classic3k or reopt2k")->required()->check(
		CLI::IsMember({"classic3k", "reopt2k"}));
	add_input(kvc);

	auto *reopt = app.add_subcommand("reopt", "reoptimization kernels");
	reopt->require_subcommand(1);
	auto *rk = reopt->add_subcommand("kernelize", "compositional dispatch");
	std::string r_problem, r_comp, r_mono;
	bool r_materialize = false;
	std::size_t r_bound = dispatch_options{}.vertex_del_component_bound;
	rk->add_option("--problem", r_problem, "ivst, generic, small-component or large-components")
		->required()
		->check(CLI::IsMember({"ivst", "generic", "small-component", "large-components"}));
	rk->add_option("--comp", r_comp, "declared compositionality")->check(CLI::IsMember({"or", "and"}));
	rk->add_option("--mono", r_mono, "declared monotonicity (m or c)")->check(CLI::IsMember({"m", "c"}));
	rk->add_flag("--materialize", r_materialize, "emit the canonical yes-instance instead of Decided(yes)");
	rk->add_option("--vertex-del-bound", r_bound, "component bound for vertex deletion");
	add_input(rk);

	auto *gadget = app.add_subcommand("gadget", "hardness constructions");
	gadget->require_subcommand(1);
	auto *g_sc = gadget->add_subcommand("setcover-cvc", "set cover to connected vertex cover");
	add_input(g_sc);
	auto *g_ext = gadget->add_subcommand("extremal", "extremal instance");
	std::string ext_problem;
	int ext_k = 1;
	g_ext->add_option("--problem", ext_problem)->required();
	g_ext->add_option("-k", ext_k, "parameter")->required();
	auto *g_neg = gadget->add_subcommand("negative", "negative reoptimization instance");
	std::string neg_problem, neg_removal = "edge";
	g_neg->add_option("--problem", neg_problem)->required();
	g_neg->add_option("--removal", neg_removal)->check(CLI::IsMember({"edge", "vertex"}));
	add_input(g_neg);
	auto *g_clq = gadget->add_subcommand("clique-reopt", "clique addition instance");
	std::string clq_mode = "edge-add";
	g_clq->add_option("--mode", clq_mode)->check(CLI::IsMember({"edge-add", "vertex-add"}));
	add_input(g_clq);

	auto *solve = app.add_subcommand("solve", "exact oracle");
	std::string s_problem;
	solve->add_option("--problem", s_problem, "problem kind, defaults to the document's");
	add_input(solve);

	auto *verify = app.add_subcommand("verify", "validators (exit 0 iff valid)");
	verify->require_subcommand(1);
	auto *v_crown = verify->add_subcommand("crown", "crown decomposition in the document");
	add_input(v_crown);
	auto *v_sol = verify->add_subcommand("solution", "witness against problem and k");
	std::string vs_problem;
	v_sol->add_option("--problem", vs_problem);
	add_input(v_sol);
	auto *v_eq = verify->add_subcommand("kernel-equivalence", "kernel against its source instance");
	std::string eq_original, eq_kernel, eq_dir;
	v_eq->add_option("--original", eq_original);
	v_eq->add_option("--kernel", eq_kernel);
	v_eq->add_option("--dir", eq_dir, "directory of NAME.instance.json / NAME.kernel.json pairs");

	auto *corpus = app.add_subcommand("corpus", "random vertex cover corpus with kernels");
	std::uint64_t seed = 1;
	int count = 20;
	std::string corpus_dir;
	corpus->add_option("--seed", seed)->required();
	corpus->add_option("--count", count)->check(CLI::Range(0, 100000));
	corpus->add_option("--out", corpus_dir)->required();

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		const auto doc = [&] { return parse_instance(read_input(input, in)); };
		json report;
		int status = exit_ok;
		if (kvc->parsed()) {
			report = kernelize_vc(doc(), vc_mode);
		} else if (rk->parsed()) {
			const auto d = doc();
			report["command"] = "reopt kernelize";
			if (r_problem == "ivst") {
				auto inst = reopt_from(d, d.problem.value_or(problem_kind::ivst));
				auto ck = exact_component_kernelizer(spec_for(problem_kind::ivst));
				report["result"] = kernel_json(problem_kind::ivst,
				                               ivst_reopt_kernelize_eplus(inst, ck, {r_materialize, std::nullopt}));
			} else {
				problem_spec spec = r_problem == "generic"           ? spec_for(require(d.problem, "problem"))
				                    : r_problem == "small-component" ? synthetic::small_component()
				                                                     : synthetic::large_components();
				const auto declared_comp = r_comp == "or" ? compositionality::or_comp : compositionality::and_comp;
				const auto declared_mono = r_mono == "m" ? monotonicity::monotone : monotonicity::comonotone;
				if ((!r_comp.empty() && declared_comp != spec.comp) || (!r_mono.empty() && declared_mono != spec.mono))
					throw error(error_code::spec_modification_mismatch,
					            spec.name + " is " + std::string(to_string(spec.comp)) + ", " +
					                std::string(to_string(spec.mono)));
				auto inst = reopt_from(d, spec.kind.value_or(d.problem.value_or(problem_kind::vertex_cover)));
				auto out_d = compositional_reopt_dispatch(inst, spec, exact_component_kernelizer(spec), {r_bound});
				report["spec"] = {{"name", spec.name},
				                  {"compositionality", to_string(spec.comp)},
				                  {"monotonicity", to_string(spec.mono)}};
				report["branch"] = to_string(out_d.branch);
				report["environment_components"] = out_d.environment_components;
				report["result"] = kernel_json(inst.problem, out_d.result);
			}
		} else if (g_sc->parsed()) {
			auto gd = build_setcover_cvc(require(doc().set_cover, "set_cover"));
			auto d = reopt_document(gd.reopt_view());
			d.set_cover = gd.sc;
			report = detail::document_to_json(d);
		} else if (g_ext->parsed()) {
			const auto p = problem_from(ext_problem, {});
			auto built = build_extremal(p, ext_k);
			instance_document d;
			d.problem = p;
			d.k = ext_k;
			if (auto *g = std::get_if<graph>(&built)) {
				d.g = *g;
			} else {
				const auto &dg = std::get<digraph>(built);
				d.g = graph(dg.vertex_count());
				d.arcs = dg.arcs();
			}
			report = detail::document_to_json(d);
		} else if (g_neg->parsed()) {
			const auto d = doc();
			auto inst = build_negative_reopt_instance(problem_from(neg_problem, d), d.g, require(d.k, "k"),
			                                          neg_removal == "edge" ? removal_kind::edge : removal_kind::vertex);
			report = detail::document_to_json(reopt_document(inst));
		} else if (g_clq->parsed()) {
			const auto d = doc();
			auto inst = build_clique_reopt_instance(d.g, require(d.k, "k"),
			                                        clq_mode == "edge-add" ? clique_mode::edge_add : clique_mode::vertex_add);
			report = detail::document_to_json(reopt_document(inst));
		} else if (solve->parsed()) {
			const auto d = doc();
			const auto p = problem_from(s_problem, d);
			exact_solution r;
			if (p == problem_kind::set_cover)
				r = solve_set_cover(require(d.set_cover, "set_cover"));
			else if (p == problem_kind::leaf_out_tree)
				r = solve_leaf_out_tree(d.to_digraph());
			else
				r = solve_exact(p, d.g);
			report = {{"command", "solve"},
			          {"problem", to_string(p)},
			          {"feasible", r.feasible},
			          {"value", r.value},
			          {"witness", solution_json(r.witness)}};
		} else if (v_crown->parsed()) {
			const auto d = doc();
			auto violations = validate_crown(d.g, require(d.crown, "crown"));
			json list = json::array();
			for (const auto &v : violations)
				list.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
			report = {{"command", "verify crown"}, {"valid", violations.empty()}, {"violations", list}};
			status = violations.empty() ? exit_ok : exit_invalid;
		} else if (v_sol->parsed()) {
			const auto d = doc();
			const auto p = problem_from(vs_problem, d);
			const auto &w = require(d.witness, "witness");
			bool valid = false;
			if (p == problem_kind::set_cover)
				valid = verify_solution(require(d.set_cover, "set_cover"), w);
			else if (p == problem_kind::leaf_out_tree)
				valid = verify_solution(d.to_digraph(), require(d.k, "k"), w);
			else
				valid = verify_solution(p, d.g, require(d.k, "k"), w);
			report = {{"command", "verify solution"}, {"problem", to_string(p)}, {"valid", valid}};
			if (p != problem_kind::set_cover && p != problem_kind::leaf_out_tree) {
				auto value = solution_value(p, d.g, w);
				report["value"] = value ? json(*value) : json(nullptr);
			}
			status = valid ? exit_ok : exit_invalid;
		} else if (v_eq->parsed()) {
			report["command"] = "verify kernel-equivalence";
			if (!eq_dir.empty()) {
				std::vector<fs::path> instances;
				for (const auto &entry : fs::directory_iterator(eq_dir)) {
					const auto name = entry.path().filename().string();
					if (name.size() > 14 && name.ends_with(".instance.json"))
						instances.push_back(entry.path());
				}
				std::sort(instances.begin(), instances.end());
				if (instances.empty())
					throw usage_error("no *.instance.json files in " + eq_dir);
				json mismatches = json::array();
				for (const auto &p : instances) {
					const auto name = p.filename().string();
					const auto stem = name.substr(0, name.size() - 14);
					const auto kernel_path = p.parent_path() / (stem + ".kernel.json");
					auto d = parse_instance(read_input(p.string(), in));
					auto kernel = kernel_from_json(json::parse(read_input(kernel_path.string(), in)));
					if (!equivalence_report(d, kernel)["equivalent"].get<bool>())
						mismatches.push_back(stem);
				}
				report["pairs"] = instances.size();
				report["mismatches"] = mismatches;
				status = mismatches.empty() ? exit_ok : exit_invalid;
			} else {
				if (eq_original.empty() || eq_kernel.empty())
					throw usage_error("need --original and --kernel, or --dir");
				auto d = parse_instance(read_input(eq_original, in));
				auto kernel = kernel_from_json(json::parse(read_input(eq_kernel, in)));
				auto r = equivalence_report(d, kernel);
				report.update(r);
				status = r["equivalent"].get<bool>() ? exit_ok : exit_invalid;
			}
		} else if (corpus->parsed()) {
			report = make_corpus(seed, count, corpus_dir);
		}
		out << dump(report);
		return status;
	} catch (const usage_error &e) {
		out << dump({{"error", "Usage"}, {"message", e.what()}});
		err << "reokern: " << e.what() << "\n";
		return exit_usage;
	} catch (const json::exception &e) {
		out << dump({{"error", "ParseError"}, {"message", e.what()}});
		err << "reokern: " << e.what() << "\n";
		return exit_usage;
	} catch (const error &e) {
		out << dump({{"error", to_string(e.code())}, {"message", e.what()}});
		err << "reokern: " << e.what() << "\n";
		return status_for(e.code());
	} catch (const fs::filesystem_error &e) {
		out << dump({{"error", "Usage"}, {"message", e.what()}});
		err << "reokern: " << e.what() << "\n";
		return exit_usage;
	}
}

}  // namespace reokern
