#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gamedec {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error,
/// 2 parse/input error, 3 verification failure, 4 internal invariant failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gamedec
