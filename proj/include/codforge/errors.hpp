#pragma once

#include <stdexcept>
#include <string>

namespace codforge {

/// Invalid argument passed to a library operation (index out of range,
/// unsupported parameter, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called on an input that violates its precondition, e.g. a
/// predicate that is only defined on verified CODs.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input is not structured the way every COD must be.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An atomic part does not match any first-type atomic class.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested design exceeds the configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace codforge
