#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class ValenceMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class InvalidParity : public Error {
 public:
  using Error::Error;
};

/// Raised when a stable invariant fails to come out as a Laurent polynomial.
/// This can only mean a bug upstream.
class PolynomialityViolation : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class DepthInfeasible : public Error {
 public:
  using Error::Error;
};

class MiddleMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Internal consistency failure (d*d != 0, broken degree bookkeeping, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qtl
