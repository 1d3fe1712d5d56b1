#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by an exact zero scalar.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

// A denominator factor vanished during evaluation.  The message names the
// factor (and term index, when applicable).
struct PoleError : Error {
    using Error::Error;
};

// A point violates a pair's or identity's parameter constraint (e.g. k=q).
struct ConstraintError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (zero valuation, base mismatch, ...).
struct DomainError : Error {
    using Error::Error;
};

// Rejection sampling exhausted max_retries.
struct SamplerError : Error {
    using Error::Error;
};

} // namespace wpb
