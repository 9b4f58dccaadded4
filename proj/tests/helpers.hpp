#pragma once

#include "cusp/newton.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace helpers {

inline cusp::NewtonPairType two_pair(long long p1, long long q1, long long p2, long long q2) {
    const auto validated = cusp::validate_type(p1, q1, p2, q2);
    if (!std::holds_alternative<cusp::NewtonPairType>(validated))
        throw std::logic_error("test fixture expected a valid two-pair type");
    return std::get<cusp::NewtonPairType>(validated);
}

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, captures its stdout and decodes the exit status.
inline CmdResult run_cmd(const std::string& command) {
    CmdResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

} // namespace helpers
