#pragma once

#include <stdexcept>
#include <string>

namespace gi {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A value violates the invariant of its type (e.g. lower entries of a UT_n matrix).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotAnInvolution : public Error {
public:
    using Error::Error;
};

class NotAnAutomorphism : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when a result that is guaranteed mathematically does not hold.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace gi
