#pragma once

#include <stdexcept>

namespace cotan {

/// Argument outside the mathematical domain of an operation (b < 2, zero denominator, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument inside the domain but outside the hypotheses of a theorem being applied.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Strict: theorem hypotheses are enforced with PreconditionError.
/// Permissive: the quantity is computed anyway and no identity is asserted.
enum class CheckMode { Permissive, Strict };

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace cotan
