#ifndef BEACHCOMB_CLI_HPP
#define BEACHCOMB_CLI_HPP

#include <string>
#include <vector>

namespace beachcomb {

// Command-line front end. `argv` follows main() conventions (argv[0] is
// the program name). Exit codes: 0 success/feasible, 1 infeasible or
// bound violated, 2 usage error, 3 I/O or parse error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& argv);

}  // namespace beachcomb

#endif
