#pragma once

#include <stdexcept>
#include <string>

namespace displab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a hard cap (vertex-set width, brute-force budget, --max-order).
class SizeError : public Error {
public:
    using Error::Error;
};

// Malformed text, JSON, family string or rational literal.
class ParseError : public Error {
public:
    using Error::Error;
};

// Parameters outside the documented range of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// An internal self-check failed; indicates a bug rather than bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace displab
