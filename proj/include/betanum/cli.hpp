#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betanum::cli {

/// Runs one CLI invocation (args exclude the program name) and writes the
/// result to out / diagnostics to err.  Returns the process exit status:
/// 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace betanum::cli
