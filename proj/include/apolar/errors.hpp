#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace apolar {

// Shapes or spaces that do not fit together (length mismatch, foreign VarSpace, ...).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the domain of an operation (zero polynomial, e > d, k = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation refused because it would exceed the matrix-size budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::optional<unsigned> power = std::nullopt)
        : std::runtime_error(what), power_(power) {}

    // The tensor power that tripped the budget, when there is one.
    std::optional<unsigned> power() const noexcept { return power_; }

private:
    std::optional<unsigned> power_;
};

// Polynomial or group-declaration text that does not parse. Positions are 1-based.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace apolar
