#pragma once

#include <stdexcept>
#include <string>

namespace skewnabla {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with a different number of variables.
class VariableCountError : public Error {
 public:
  VariableCountError(std::size_t lhs, std::size_t rhs)
      : Error("variable count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A variable, box or matrix index outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A tuple that is not a member of P_N.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Parameters violating a documented constraint, e.g. a + b != N - 1.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Schur expansion met a lex-leading exponent that is not weakly decreasing.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// An exact division left a remainder. Never expected from the determinant code.
class ExactDivisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewnabla
