#pragma once

#include <stdexcept>
#include <string>

namespace wrol {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
};

class NoMPInverse : public Error {
 public:
  explicit NoMPInverse(const std::string& what = "Moore-Penrose inverse does not exist") : Error(what) {}
};

class NotGroupInvertible : public Error {
 public:
  NotGroupInvertible() : Error("matrix is not group invertible (rank(A^2) < rank(A))") {}
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class EmptyK : public Error {
 public:
  EmptyK() : Error("empty index set K") {}
};

/// A law's precondition fails; `what()` names the failed hypothesis.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar string, matrix JSON or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wrol
