#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlsig {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// A Sturm query endpoint is itself a root of the polynomial.
class EndpointRootError : public Error {
 public:
  using Error::Error;
};

class EmptyIntervalError : public Error {
 public:
  using Error::Error;
};

/// The matrix does not have the row (or column) extension shape.
class PatternMismatchError : public Error {
 public:
  using Error::Error;
};

class NotUnimodularError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotOnUnitCircleError : public Error {
 public:
  using Error::Error;
};

/// det(tS - S^T) vanishes identically; the signature limit is not certified.
class ZeroAlexanderError : public Error {
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
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace tlsig
