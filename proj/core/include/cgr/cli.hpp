#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgr {

// Entry point of the command line tool, separated from main() so tests can
// drive it in-process. Returns the process exit code: 0 success, 1 a check
// failed or a construction aborted, 2 usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgr
