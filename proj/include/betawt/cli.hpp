#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betawt::cli {

// Runs one subcommand given argv-style arguments (program name excluded).
// Artifacts go to --out when given, otherwise to `out`; diagnostics are a
// single line on `err`. Exit codes: 0 success, 2 invalid arguments,
// 3 numerical convergence failure, 4 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betawt::cli
