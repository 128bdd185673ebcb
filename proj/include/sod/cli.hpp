#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sod {

/// Dispatch one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success or verification pass, 1 verification failure,
/// 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sod
