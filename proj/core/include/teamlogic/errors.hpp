#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamlogic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset()` is the 0-based byte offset of the
/// offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A formula violates a structural invariant or is outside the logic an
/// operation accepts (e.g. an inclusion atom handed to a rewrite).
class FormulaError : public Error {
 public:
  using Error::Error;
};

/// Model construction or reference errors: unknown worlds or propositions,
/// teams that are not subsets of the domain, malformed model documents.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A configured search or enumeration budget was exhausted. Never a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Requested semantics variant is not supported (only lax semantics is).
class UnsupportedSemantics : public Error {
 public:
  using Error::Error;
};

}  // namespace teamlogic
