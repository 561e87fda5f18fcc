#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "numerals/checks.hpp"

namespace numerals::cli {

enum ExitCode : int {
	kOk = 0,
	kFailure = 1, // domain error or failing property
	kUsage = 2,   // bad flags, unparsable literal, canonicality violation
};

/// Runs one `numerals` subcommand. `args` excludes the program name.
/// The `braun` subcommand reads its script from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints one PASS/FAIL line per property and a summary line; returns the
/// exit code for the report.
int print_check_report(const std::vector<checks::PropertyResult>& results, std::ostream& out);

} // namespace numerals::cli
