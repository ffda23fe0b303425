#pragma once

#include <stdexcept>
#include <string>

namespace pqsym {

/// Malformed input: bad parameters, ambient mismatch, a cover that breaks
/// gradedness, an unparsable file. The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that fails a mathematical precondition, e.g. an element
/// outside the peak algebra handed to a peak-only operation (exit code 3).
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant was breached, e.g. a singular change-of-basis
/// system that theory says is invertible (exit code 4).
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pqsym
