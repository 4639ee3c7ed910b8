#pragma once

#include <stdexcept>
#include <string>

namespace prox {

// Base class for every error raised by this toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input container has the wrong shape (non-square matrix, ragged rows, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input values break a documented constraint of the operation.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Scalar parameter lies outside the domain of the formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation was called on a state that fails its preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file or report.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace prox
