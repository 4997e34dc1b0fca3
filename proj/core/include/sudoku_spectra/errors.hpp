#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sudoku_spectra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tiling text: bad token, wrong row or column count.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Block labels that do not form an equal-size partition.
class PartitionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The floating-point oracle missed its residual target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A layer matrix lacks the clique / multipartite shape it must have.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

/// Two formulations that must agree did not. Always an implementation bug.
class EquivalenceViolation : public Error {
 public:
  using Error::Error;
};

/// A clause of the eigenbasis verification failed.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string clause, const std::string& detail)
      : Error(clause + ": " + detail), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace sudoku_spectra
