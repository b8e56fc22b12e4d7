#include "reokern/error.hpp"

namespace reokern {

std::string_view to_string(error_code code) {
	switch (code) {
	case error_code::modification_invalid: return "ModificationInvalid";
	case error_code::vertex_out_of_range: return "VertexOutOfRange";
	case error_code::invalid_graph: return "InvalidGraph";
	case error_code::sides_overlap: return "SidesOverlap";
	case error_code::target_unmatched: return "TargetUnmatched";
	case error_code::precondition_violated: return "PreconditionViolated";
	case error_code::internal_invariant_broken: return "InternalInvariantBroken";
	case error_code::invalid_crown: return "InvalidCrown";
	case error_code::not_a_cover: return "NotACover";
	case error_code::witness_not_a_cover: return "WitnessNotACover";
	case error_code::modification_mismatch: return "ModificationMismatch";
	case error_code::spec_modification_mismatch: return "SpecModificationMismatch";
	case error_code::degree_too_high: return "DegreeTooHigh";
	case error_code::unsupported_problem: return "UnsupportedProblem";
	case error_code::unsupported_combination: return "UnsupportedCombination";
	case error_code::invalid_set_cover: return "InvalidSetCover";
	case error_code::size_guard_exceeded: return "SizeGuardExceeded";
	case error_code::oracle_too_slow: return "OracleTooSlow";
	case error_code::kernel_parameter_mismatch: return "KernelParameterMismatch";
	case error_code::parse_error: return "ParseError";
	}
	return "Unknown";
}

}  // namespace reokern
