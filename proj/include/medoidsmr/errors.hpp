#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace medoidsmr {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's preconditions.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The dataset cannot support the request (e.g. fewer distinct points than k).
class DegenerateDatasetError : public Error {
 public:
  using Error::Error;
};

/// A text input could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file parsed but its shape is wrong (inconsistent dimension, bad ids).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A parsed value is out of domain (non-finite coordinate and the like).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The instance is too large for an exhaustive operation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A map or reduce task failed; the message names the offending split or key.
class JobError : public Error {
 public:
  using Error::Error;
};

/// Benchmark cells produced diverging clusterings; timings would be meaningless.
class DeterminismGateError : public Error {
 public:
  using Error::Error;
};

/// File system failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace medoidsmr
