#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendri {

/// Operand shapes do not conform.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live in different fields.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold (input is not
/// dendriform, r is not factorizable, weight is zero, ...).
class PreconditionFailed : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input text. Carries the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace dendri
