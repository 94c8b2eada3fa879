#pragma once

#include <stdexcept>
#include <string>

namespace hrecol {

/// Malformed or out-of-range user input, or an instance that violates the
/// hypotheses of the selected solving mode.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition of an internal operation did not hold. Reaching one of
/// these from the CLI means a bug, not bad input.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const char* what)
{
    if (!condition)
        throw ContractViolation(what);
}

} // namespace hrecol
