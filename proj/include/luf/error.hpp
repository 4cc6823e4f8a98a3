#pragma once

#include <stdexcept>
#include <string>

namespace luf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exponential-time procedure was asked to run above its configured bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// The input is not long-unichord-free (or a structural invariant broke).
class NotInClass : public Error {
public:
    using Error::Error;
};

/// A runtime self-check failed. Always a bug, never an input problem.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace luf
