#pragma once

#include <stdexcept>
#include <string>

namespace frobtor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different ring descriptors.
class DescriptorMismatch : public Error {
public:
    DescriptorMismatch() : Error("operands belong to different rings") {}
    using Error::Error;
};

/// An exponent, degree, rank or size exceeded its representable or configured bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Degree of the zero polynomial was requested.
class UndefinedDegree : public Error {
public:
    UndefinedDegree() : Error("the zero polynomial has no degree") {}
};

/// A generator or complex is not homogeneous for the declared weights.
class GradingError : public Error {
public:
    using Error::Error;
};

/// The defining ideal is the unit ideal.
class DegenerateRing : public Error {
public:
    DegenerateRing() : Error("the defining ideal contains 1") {}
};

/// A multiplier that vanishes in the quotient ring.
class InvalidMultiplier : public Error {
public:
    using Error::Error;
};

/// Too few usable data points for a fit.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line = 0, int column = 0)
        : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
          message_(message),
          line_(line),
          column_(column) {}

    /// Message without the position prefix.
    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

/// Internal invariant violated (a bug, not bad input).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace frobtor
