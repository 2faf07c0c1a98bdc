#pragma once

#include <stdexcept>
#include <string>

namespace polybinom {

// Malformed or inapplicable input (bad file, loop contraction, degree too
// large for the requested transform). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration budget was exceeded. The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An asserted postcondition failed: non-integral interpolation, a broken
// polynomial identity, or a property check in verification mode.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace polybinom
