#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterkit {

/// Runs one CLI command. Exit codes: 0 success, 1 verification failure or
/// counterexample suspect, 2 bad input, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterkit
