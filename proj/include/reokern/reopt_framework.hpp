#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reokern/graph.hpp"
#include "reokern/instance.hpp"

namespace reokern {

enum class monotonicity { monotone, comonotone, neither };
enum class compositionality { or_comp, and_comp, neither };
enum class composition_mode { or_mode, and_mode };

std::string_view to_string(monotonicity m);
std::string_view to_string(compositionality c);

struct problem_spec {
	std::string name;
	direction dir = direction::min;
	monotonicity mono = monotonicity::neither;
	compositionality comp = compositionality::neither;
	// False when closure only holds for edge modifications.
	bool vertex_modifications = true;
	std::function<bool(const graph &, int, const solution &)> verifier;
	std::function<bool(const graph &, int)> oracle;
	// Set for problems backed by a problem_kind.
	std::optional<problem_kind> kind;
};

// IVST, LongestPath, Clique: OR + comonotone. Treewidth: AND + monotone.
// VertexCover: monotone, not compositional. Others throw unsupported_problem.
problem_spec spec_for(problem_kind kind);

namespace synthetic {
// Some component has at most k edges. OR, monotone under edge deletion.
problem_spec small_component();
// Every component has at least k edges. AND, comonotone under edge deletion.
problem_spec large_components();
}  // namespace synthetic

struct component_kernelizer {
	std::string name;
	std::function<kernel_result(const graph &, int)> run;
	std::function<std::size_t(int)> size_bound;
};

// Decides each component with the spec's oracle. Not polynomial.
component_kernelizer exact_component_kernelizer(const problem_spec &spec);

// Components of the modified graph touched by m, with index maps into the
// modified graph.
std::vector<subgraph> environment(const graph &g_before, const local_modification &m);

// Whether one of the four dispatch rules covers this spec under m.
bool supports_modification(const problem_spec &spec, const local_modification &m);

struct dispatch_options {
	std::size_t vertex_del_component_bound = 8;
};

enum class dispatch_branch { witness_yes, witness_no, environment };
std::string_view to_string(dispatch_branch b);

struct dispatch_outcome {
	kernel_result result;
	dispatch_branch branch = dispatch_branch::environment;
	std::size_t environment_components = 0;
};

// Errors: spec_modification_mismatch (checked before anything else),
// precondition_violated when modified_k != k, degree_too_high. The witness
// branches decide from the presence of the witness alone.
dispatch_outcome compositional_reopt_dispatch(const reopt_instance &inst, const problem_spec &spec,
                                              const component_kernelizer &ck,
                                              const dispatch_options &opt = {});
kernel_result compositional_reopt_kernelize(const reopt_instance &inst, const problem_spec &spec,
                                            const component_kernelizer &ck, const dispatch_options &opt = {});

// Disjoint union of component kernels. Reduced parts must share a parameter
// (kernel_parameter_mismatch otherwise).
kernel_result combine_kernels(composition_mode mode, const std::vector<kernel_result> &parts);

// (P_{k+2}, k) with size bound k+2.
reduced canonical_ivst_yes(int k);

struct ivst_options {
	// Replace Decided(yes) by the canonical yes-instance.
	bool materialize_yes = false;
	// Kernel of (G,k) given instead of a witness; the result is its disjoint
	// union with the environment kernel.
	std::optional<kernel_result> original_kernel;
};

// A witness tree counts when it has at least k internal vertices; otherwise
// it is treated as absent.
kernel_result ivst_reopt_kernelize_eplus(const reopt_instance &inst, const component_kernelizer &ck,
                                         const ivst_options &opt = {});

struct composition_counterexample {
	graph g1;
	graph g2;
	int k = 0;
};

// Sweeps all labeled graph pairs with 1..size_bound vertices and
// k = 0..size_bound. Returns the first counterexample.
std::optional<composition_counterexample> check_composition(const problem_spec &spec, composition_mode mode,
                                                            std::size_t size_bound);

struct closure_counterexample {
	graph before;
	local_modification modification;
	int k = 0;
};

// Monotone: yes-instances stay yes under single deletions. Comonotone: under
// single additions. Vertex modifications only if the spec allows them.
std::optional<closure_counterexample> check_closure(const problem_spec &spec, std::size_t size_bound);

// All labeled graphs on n vertices, in edge-mask order.
void for_each_graph(std::size_t n, const std::function<void(const graph &)> &fn);

}  // namespace reokern
