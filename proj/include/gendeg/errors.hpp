#pragma once

#include <stdexcept>
#include <string>

namespace gendeg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Invalid parameter value (epsilon, alpha, grid, size, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Edge operation precondition violated: loop requested, edge already
/// present on add, or absent on remove.
class EdgeStateError : public Error {
public:
    using Error::Error;
};

/// Operation refused because the graph exceeds a hard size limit.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Numeric failure: non-finite values or a solver that missed its
/// residual target.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace gendeg
