#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An explicit enumeration would exceed the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An evaluation budget (grid points, sign patterns, prime cap) was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An exact integer does not fit the platform integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what)
      : Error("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of arguments to a multilinear form.
class ArityError : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Input for which the requested quantity is undefined (e.g. the zero chaos).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the form "sup norm <= 1" is not certified.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sidon
