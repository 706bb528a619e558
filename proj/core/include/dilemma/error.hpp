#pragma once

#include <stdexcept>
#include <string>

namespace dilemma {

// Bad argument values: even n, theta out of range, unknown mode names.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input violates a structural precondition (a non-antichain passed where an
// antichain is required, a set that is not upward closed, size mismatches).
class structural_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Full rule enumeration was requested beyond the configured bounds.
class bounds_exceeded : public invalid_parameter {
public:
    using invalid_parameter::invalid_parameter;
};

}  // namespace dilemma
