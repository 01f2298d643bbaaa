#pragma once

#include <stdexcept>
#include <string>

namespace hfpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary operation disagree in length or modulus.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Division by (x+1) is not exact (odd-weight dividend).
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A generator vector cannot be completed to a type-Q structure.
class NotTypeQCandidate : public Error {
 public:
  using Error::Error;
};

/// A (G, D, u) triple violates the Hadamard group conditions.
class NotHadamardGroup : public Error {
 public:
  using Error::Error;
};

/// A word passed as a kernel element is not in K(C).
class NotKernelElement : public Error {
 public:
  using Error::Error;
};

/// A code failed HFP verification where a verified code was required.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// A reconstructed code does not reproduce the matrix it was read from.
class IndexingInconsistency : public Error {
 public:
  using Error::Error;
};

/// A transform precondition on the kernel (k = 2, known iota) failed.
class KernelPrecondition : public Error {
 public:
  using Error::Error;
};

/// A proved rank/kernel bound was violated; always an internal bug.
class BoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input text, with 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hfpq
