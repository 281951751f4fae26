#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gring {

// Parses arguments (without the program name), runs the subcommand and
// writes the JSON report to --out or `out`. Exit codes: 0 success, 1 the
// report contains violations, 2 input/usage error, 3 unsupported operation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gring
