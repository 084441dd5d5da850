#ifndef MAHLERSEP_CLI_HPP
#define MAHLERSEP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace msep::cli {

enum ExitCode : int {
    ok = 0,
    bound_violation = 1,
    non_separable = 2,
    solver_failure = 3,
    invalid_input = 4,
};

/// Runs the `mahler-sep` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msep::cli

#endif  // MAHLERSEP_CLI_HPP
