#pragma once

#include <stdexcept>
#include <string>

namespace tritail {

// Malformed arguments: out-of-range vertices, self-loops, bad parameter ranges.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented operation precondition does not hold (disconnected input, 3k > n, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An experiment cannot produce an answer with the given resources
// (e.g. rejection sampling acceptance rate below the configured floor).
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural fact guaranteed by construction failed; indicates a bug.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

// An iterative numeric procedure failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tritail
