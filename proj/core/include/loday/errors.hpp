#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace loday {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different charts, or a coordinate is not part of the chart.
class ChartError : public Error {
 public:
  using Error::Error;
};

/// A fiber function does not have the fiber degree an operation requires.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Parity, degree or shape violations of structures and vector fields.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Two computational routes that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed algebroid or cocycle data.
class DataError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownIdentifier, OddPower };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Structure-file problems; `pointer()` is a JSON pointer to the offending field.
class FormatError : public Error {
 public:
  FormatError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace loday
