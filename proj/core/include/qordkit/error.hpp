#pragma once

#include <stdexcept>
#include <string>

namespace qordkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: foreign symbols, mismatched alphabets, invalid tables.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// The structural generating-function rules do not apply to this expression.
class AmbiguousExpression : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Raised when x <= y is required but no witness exists.
class NoWitness : public Error {
public:
    using Error::Error;
};

} // namespace qordkit
