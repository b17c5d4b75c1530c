#pragma once

#include <stdexcept>
#include <string>

namespace edr {

/// An operation was requested that the ring instance does not support
/// (e.g. a Euclidean-only algorithm on a ring without a Euclidean norm).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the values was violated: division by zero, scaling a
/// row by a non-unit, a Kaplansky triple whose gcd is not a unit, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Incompatible matrix dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A guaranteed internal invariant failed. This is never a user error: it
/// indicates a bug or an inconsistent ring instance and is not recoverable.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] inline void internal_violation(const std::string& what) {
    throw InternalError("internal invariant violated: " + what);
}

inline void require_internal(bool ok, const char* what) {
    if (!ok) internal_violation(what);
}

}  // namespace edr
