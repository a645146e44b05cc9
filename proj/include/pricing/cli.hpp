#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pricing {

/// Dispatches one CLI invocation. `argv` excludes the program name, e.g.
/// {"solve", "pre", "--instance", "table1.json"}. Results go to `out`
/// (JSON/CSV), diagnostics to `err`. Exit codes: 0 success, 1 domain error,
/// 2 usage error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pricing
