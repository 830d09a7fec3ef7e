#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace omp {

// Errors carry a short stable code string next to the human-readable message,
// so the CLI can map failures to exit codes and tests can assert on causes
// without string-matching whole messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace omp
