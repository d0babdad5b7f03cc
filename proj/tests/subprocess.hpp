#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs a shell command, capturing stdout. Tests build the command from
// trusted literals, so no quoting layer here.
inline RunResult run(const std::string& command) {
    std::FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t read = 0;
    while ((read = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), read);
    }
    const int status = ::pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport
