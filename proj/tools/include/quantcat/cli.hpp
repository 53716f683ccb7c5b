#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quantcat {

/// Runs one command line; `args` excludes the program name.
/// Returns 0 when every check passes, 1 on a failed check, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quantcat
