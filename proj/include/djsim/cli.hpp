// Command-line front end. Kept as a library function so the tests can run
// commands in-process.

#pragma once

#include <string>
#include <vector>

namespace djsim::cli {

/// Run one command. Returns the process exit code: 0 on success, 2 on a
/// usage error, 1 on a validation/runtime failure.
int execute(const std::vector<std::string>& args);
int execute(int argc, const char* const* argv);

}  // namespace djsim::cli
