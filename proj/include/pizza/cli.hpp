#pragma once

#include "pizza/core.hpp"

#include <iosfwd>
#include <string>

namespace pizza {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_violation = 3,
    exit_infeasible = 4,
};

/// Reads "inline:1,0,1" or a file holding a comma-separated size list.
Pizza load_pizza(const std::string& source);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pizza
