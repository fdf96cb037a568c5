#pragma once

#include <stdexcept>
#include <string>

namespace carries {

// Input outside an operation's mathematical domain (b < 1, deg h > n-2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Matrix dimensions incompatible with the requested operation.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal identity failed to hold. Never caused by valid input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed textual input ("p/q" strings, JSON documents).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace carries
