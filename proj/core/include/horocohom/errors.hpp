#pragma once

#include <stdexcept>

namespace horo {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data does not have the required shape: malformed JSON, wrong key
// sets, floating-point literals where integers are required, unknown labels.
class ParseError : public Error {
public:
    using Error::Error;
};

// Input violates a geometric or combinatorial invariant (non-smooth fan,
// incomplete fan, misaligned divisor, inconsistent model data).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured resource cap was exceeded before the computation finished.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Checked 64-bit integer arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace horo
