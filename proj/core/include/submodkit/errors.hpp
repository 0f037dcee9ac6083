#pragma once

#include <stdexcept>
#include <string>

namespace submodkit {

/// Base class for all submodkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the domain an operation is defined on
/// (bad bitmask, index out of range, overlapping subsets, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A validated hypothesis of an inequality does not hold
/// (f not submodular, cover condition violated, f(empty) != 0, ...).
/// The message names the failed predicate.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An oracle refuses an instance above its size cap. Oracles never
/// truncate silently.
class CapError : public Error {
public:
    using Error::Error;
};

/// Text-format parse failure with line/column diagnostics.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace submodkit
