#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invop {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success or a passing check, 1 when a check fails, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invop
