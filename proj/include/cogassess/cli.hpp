#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cogassess {

/// Entry point of the `cogassess` tool. `args` excludes the program name.
/// Returns the process exit code: 0 success, 2 input error, 3 validation
/// failure, 4 I/O error, 5 unknown grade label, 6 empty cohort.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogassess
