#pragma once

#include <string>
#include <vector>

namespace lctkit {

inline constexpr const char* kVersion = "lctkit 1.0.0";

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs the command-line front end on argv without the program name.
/// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 internal error.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace lctkit
