#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanfree {

// Caller passed arguments violating an operation's precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request is well-formed but exceeds what this build is sized for
// (canonical-form cap, enumeration cap, search budget, ...).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input; offset is the byte where parsing failed.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// A supplied partition is not equitable; identifies the witness.
struct equitability_error : std::runtime_error {
    std::size_t vertex;
    std::size_t klass;
    equitability_error(const std::string& msg, std::size_t v, std::size_t c)
        : std::runtime_error(msg), vertex(v), klass(c) {}
};

// An internal certified construction failed its own certificate.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fanfree
