#pragma once

#include <stdexcept>
#include <string>

namespace schreier {

// Caller passed a parameter outside the documented range (k < 1, n < 1, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked for more than its configured size cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A constructive map was applied to a set outside its domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace schreier
