#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projew {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or schema error in an input expression/document. `offset` is the
// byte position in the source text the error points at.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        raw_(message),
        offset_(offset) {}

  const std::string& raw_message() const { return raw_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string raw_;
  std::size_t offset_;
};

// Evaluation of a rational function at a point where a denominator vanishes.
class PoleError : public Error {
 public:
  PoleError(const std::string& denominator, const std::string& x,
            const std::string& y)
      : Error("denominator '" + denominator + "' vanishes at (" + x + ", " +
              y + ")"),
        denominator_(denominator) {}

  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

// Operation applied outside its domain (wrong branch, valence mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivideByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Symbolic computation exceeded the configured term budget.
class BudgetError : public Error {
 public:
  BudgetError(std::size_t terms, std::size_t limit)
      : Error("symbolic result exceeds term budget (" +
              std::to_string(terms) + " > " + std::to_string(limit) + ")"),
        terms_(terms),
        limit_(limit) {}

  std::size_t terms() const { return terms_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t terms_;
  std::size_t limit_;
};

}  // namespace projew
