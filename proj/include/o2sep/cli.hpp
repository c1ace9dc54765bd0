#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace o2sep {

/// Runs one CLI invocation (args exclude the program name) writing normal
/// output to out and diagnostics to err.
///
/// Exit codes: 0 every executed check passed; 1 a claimed property failed
/// verification; 2 configuration error; 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace o2sep
