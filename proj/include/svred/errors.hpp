#pragma once

#include <stdexcept>
#include <string>

namespace svred {

enum class ErrorKind {
  structural,   // ring mismatch, malformed object
  unsupported,  // operation not defined for this ideal kind / certificate kind
  precondition,
  validation,   // data failed a required check (e.g. singular minor)
  resource,     // configured cap exceeded
  parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorKind::structural, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::unsupported, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, std::string witness = {})
      : Error(ErrorKind::precondition, what), witness_(std::move(witness)) {}
  /// Printed form of the offending element, when there is one.
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace svred
