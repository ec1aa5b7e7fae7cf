#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace capflow::testing {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the capflow binary with `args` (shell-quoted by the caller); stderr is discarded.
inline ProcessResult run_capflow(const std::string& args) {
    const std::string cmd = std::string("\"") + CAPFLOW_CLI_PATH + "\" " + args + " 2>/dev/null";
    ProcessResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace capflow::testing
