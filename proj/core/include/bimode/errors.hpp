// errors.hpp — exception types with dedicated CLI exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace bimode {

// A truncated-basis computation lost more weight than the declared budget
// allows; the remedy is a larger n_max. CLI exit code 3.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration input (file or flags). CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bimode
