#pragma once

#include <stdexcept>
#include <string>

namespace snipkit {

// Error categories map onto the CLI exit-code contract:
// io -> exit 2, everything else -> exit 1.
enum class ErrorKind : unsigned char {
    io,          // unreadable/unwritable path
    parse,       // malformed file content
    integrity,   // corpus invariant broken
    config,      // invalid configuration
    not_found,   // unknown journal/document/key
    infeasible,  // generator parameters cannot be satisfied
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace snipkit
