#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reokern {

// Exit codes of run_cli.
enum exit_status : int {
	exit_ok = 0,
	exit_failure = 1,
	exit_usage = 2,
	exit_size_guard = 3,
	exit_invalid = 4,
};

// args excludes the program name. Reports go to out as JSON; diagnostics to
// err. Input documents are read from --input or, by default, from in.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace reokern
