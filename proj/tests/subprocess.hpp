#pragma once

// Minimal popen-based process runner for driving the CLI binary in tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace gdp::testing {

struct RunResult {
    int exit_code{-1};
    std::string output;  // stdout only unless the command redirects
};

inline RunResult run_command(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string shell_quote(const std::string& text) {
    return "'" + text + "'";
}

}  // namespace gdp::testing
