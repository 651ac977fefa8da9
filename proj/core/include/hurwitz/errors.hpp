#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Malformed or out-of-range arguments (bad syntax, degree mismatch, empty input).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the hypotheses under which a formula is meaningful.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured search or size guard was exceeded. Results are never truncated silently.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hurwitz
