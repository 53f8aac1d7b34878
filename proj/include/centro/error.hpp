#pragma once

#include <stdexcept>
#include <string>

namespace centro {

// Malformed text input (permutations, class specs, matrices, polynomials).
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested feature is not supported for this input (e.g. sum closure
// over a generator family that is not closed under indecomposable patterns).
class CapabilityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace centro
