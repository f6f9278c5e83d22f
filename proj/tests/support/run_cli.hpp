#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

// Runs the built CLI binary (path injected by CMake) and captures stdout and
// the exit code. stderr is dropped; tests assert on codes and stdout only.
namespace cli_runner {

struct Result {
    int exit_code = -1;
    std::string output;
};

inline Result run(const std::string& args) {
    const std::string cmd =
        std::string("CTRACE_COLOR=0 ") + CTRACE_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    Result result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = std::move(out);
    return result;
}

} // namespace cli_runner
