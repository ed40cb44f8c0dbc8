#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace formring {

// Bad user input: malformed job files, unparsable polynomials, limits that
// were set too tight (saturation/attempt caps), invalid filtrations.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error in the polynomial grammar or the job-file format.
struct ParseError : InputError {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A command declined to run because a theorem hypothesis is not met.
struct Refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold on valid inputs failed: engine bug
// or an unsatisfied standing assumption. Never converted into a verdict.
struct Inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace formring
