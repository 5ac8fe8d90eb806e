#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace central {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a named structural invariant ("associativity",
/// "range", "dimensions", "prefix-closed", ...).
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& what)
      : Error(what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class NonAssociative : public InvariantViolation {
 public:
  NonAssociative(std::size_t i, std::size_t j, std::size_t k)
      : InvariantViolation("associativity",
                           "table is not associative at (" + std::to_string(i) +
                               ", " + std::to_string(j) + ", " +
                               std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class IndexOutOfRange : public InvariantViolation {
 public:
  explicit IndexOutOfRange(const std::string& what)
      : InvariantViolation("range", what) {}
};

class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadBounds : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  ZeroDivisor() : Error("division by zero") {}
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class NodeNotInTree : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

class NoStar : public InvariantViolation {
 public:
  NoStar() : InvariantViolation("star", "variable word contains no star") {}
};

/// An exhaustive search would exceed its explicit budget. `progress` carries
/// the partial result where the raising operation defines one.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what,
                 std::optional<std::size_t> progress = std::nullopt)
      : Error(what), progress(progress) {}
  std::optional<std::size_t> progress;
};

class UndefinedAt : public Error {
 public:
  explicit UndefinedAt(std::size_t index)
      : Error("sequence undefined at " + std::to_string(index)), index(index) {}
  std::size_t index;
};

class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

/// Raised when a self-certifying construction fails its own check. This
/// always indicates a bug; the output is never returned.
class VerificationFailed : public Error {
 public:
  VerificationFailed(std::size_t letter, const std::string& what)
      : Error(what), letter(letter) {}
  std::size_t letter;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ConventionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace central
