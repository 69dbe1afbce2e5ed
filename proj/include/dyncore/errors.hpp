#pragma once

#include <stdexcept>
#include <string>

namespace dyncore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (ragged rows, bad numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An empty cell. Missing values are not supported.
class MissingValueError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Structurally valid input that does not describe a decision table.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of an operation (empty universe, bad index).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied parameter out of range (fractions, lambda).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A configured or hard enumeration limit was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dyncore
