#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "failed mathematical check" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A value with a pole at h = 0 was specialized at h = 0.
class PoleAtZero : public Error {
 public:
  PoleAtZero() : Error("entry has a pole at h = 0") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Characteristic polynomial does not split over Q. `charpoly` is printed
/// in the variable t.
class IrrationalSpectrum : public Error {
 public:
  explicit IrrationalSpectrum(std::string charpoly)
      : Error("irrational spectrum: " + charpoly), charpoly_(std::move(charpoly)) {}
  const std::string& charpoly() const { return charpoly_; }

 private:
  std::string charpoly_;
};

class AntisymmetryViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotPoisson : public Error {
 public:
  using Error::Error;
};

/// No cubic form reproduces the bracket in the requested canonical case.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// A cubic form exists but violates the case's Jacobi constraint.
class OutsideFamily : public Error {
 public:
  using Error::Error;
};

class NotCanonical : public Error {
 public:
  using Error::Error;
};

/// Non-standard block of a degree-2 relation system is singular.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NonTerminating : public Error {
 public:
  using Error::Error;
};

class DegreeGuard : public Error {
 public:
  using Error::Error;
};

class DegenerateParams : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymbol : public Error {
 public:
  using Error::Error;
};

class MissingComponent : public Error {
 public:
  using Error::Error;
};

class NonQuadratic : public Error {
 public:
  using Error::Error;
};

/// Parse failure; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qpb
