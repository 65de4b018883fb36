#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace costly {

/// Runs one CLI invocation. Exit codes: 0 success/verified, 1 verification
/// or oracle disagreement (with a counterexample printed), 2 usage, parse, or
/// resource errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace costly
