#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Positions are 1-based; for graph6 the line is the
/// input line and the column is the byte offset within it.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that does not describe a simplicial graph
/// (self-loops, duplicate edges, duplicate labels).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured size bound was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The library cannot produce an answer for this input (the answer is not
/// known to follow from the implemented criteria).
class NotSupported : public Error {
public:
    using Error::Error;
};

} // namespace raag
