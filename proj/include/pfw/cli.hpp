#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfw {

/// Runs one command-line invocation (arguments without the program name)
/// against the given output and diagnostic streams.  Returns the process
/// exit code: 0 for success and true verdicts, 1 for definite negative
/// verdicts, 2 for usage or parameter errors, 3 when a probe or search gave
/// up within its configured budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfw
