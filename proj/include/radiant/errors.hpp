#pragma once

#include <stdexcept>
#include <string>

namespace radiant {

/// Malformed or inconsistent input data (bad matrix, bad sequence, bad ray set).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input for which the requested analysis does not apply,
/// e.g. a non-radiant fan passed to a radiant-only computation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold failed to hold. Indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace radiant
