#pragma once

#include <stdexcept>
#include <string>

namespace firefront {

/// Bad input: malformed files, violated preconditions, unusable configs.
/// The CLI maps these to exit status 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geometry collapsed to something the next stage cannot use.
class DegenerateInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Least-squares design matrix without full column rank.
class SingularFitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Parse failure with a 1-based line/column position (column 0 = unknown).
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : ValidationError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Failure while the simulation is running (exit status 3 in the CLI).
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace firefront
