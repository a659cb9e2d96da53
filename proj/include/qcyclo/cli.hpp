#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcyclo::cli {

/// Dispatches one invocation.  args excludes the program name.
/// Exit codes: 0 success / true verdict, 1 false verdict or failed sweep,
/// 2 usage error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcyclo::cli
