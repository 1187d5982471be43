#pragma once

#include <string>
#include <vector>

namespace fdx::cli {

/// Entry point behind the fdx binary. Exit codes: 0 success, 1 I/O failure,
/// 2 validation failure, 3 budget exceeded. Errors are reported as one JSON
/// object on standard error.
int run(int argc, const char* const* argv);

/// Same, for in-process callers; args exclude the program name.
int run(const std::vector<std::string>& args);

} // namespace fdx::cli
