#ifndef ABELPELL_ERRORS_HPP
#define ABELPELL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abel {

// Raised when an operation's precondition is violated by its arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A truncated expansion ran out of known coefficients.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured size budget.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

// Syntax error in a polynomial expression, 1-based line and column.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InvalidInput(message + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace abel

#endif  // ABELPELL_ERRORS_HPP
