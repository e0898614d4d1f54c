#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (model documents, formulas, scripts, .aut files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : what + " at line " + std::to_string(line) + ", column " +
                                std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A document that parses but violates a structural invariant of the model.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Reference to an element, class or identifier that does not exist.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument was violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace polymin
