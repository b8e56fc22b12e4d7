#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reokern {

enum class error_code {
	modification_invalid,
	vertex_out_of_range,
	invalid_graph,
	sides_overlap,
	target_unmatched,
	precondition_violated,
	internal_invariant_broken,
	invalid_crown,
	not_a_cover,
	witness_not_a_cover,
	modification_mismatch,
	spec_modification_mismatch,
	degree_too_high,
	unsupported_problem,
	unsupported_combination,
	invalid_set_cover,
	size_guard_exceeded,
	oracle_too_slow,
	kernel_parameter_mismatch,
	parse_error,
};

std::string_view to_string(error_code code);

class error : public std::runtime_error {
public:
	error(error_code code, const std::string &what)
		: std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

	error_code code() const noexcept { return code_; }

private:
	error_code code_;
};

}  // namespace reokern
