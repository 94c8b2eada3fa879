#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrecol {

enum ExitCode : int {
    exit_yes = 0,
    exit_no = 1,
    exit_invalid_input = 2,
    exit_contract_violation = 3,
    exit_budget_exceeded = 4,
};

/// Runs one command line (args[0] is the program name). "-" as an input
/// path reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace hrecol
