#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pellsg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator list is not a valid basis (too short, duplicates, a 1, gcd != 1).
class InvalidGenerators : public Error {
 public:
  using Error::Error;
};

/// Pell-family indices outside the hypotheses of the closed forms.
class IndexConstraintViolation : public Error {
 public:
  using Error::Error;
};

class NonCoprime : public Error {
 public:
  using Error::Error;
};

/// The Apéry enumeration needed more tuple visits than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t budget, const std::string& what)
      : Error(what), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// An expression that must be an integer came out fractional.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

/// A checked closed form was asked for a level p outside its proven range.
class OutOfValidityRange : public Error {
 public:
  OutOfValidityRange(std::string bound, const std::string& what)
      : Error(what), bound_(std::move(bound)) {}
  /// Human-readable range, e.g. "p < 4" or "p <= 98".
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

/// Oracle input beyond its configured scan cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pellsg
