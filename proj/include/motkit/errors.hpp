#pragma once

#include <stdexcept>
#include <string>

namespace motkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live over different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// A coefficient has a denominator the ring does not invert.
class RingViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymbol : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Malformed input file: syntax error with a position, or schema violation
// with a JSON pointer.
class InputError : public Error {
 public:
  using Error::Error;
};

// Raised by exact division when some coefficient leaves the ring.
class NotDivisible : public Error {
 public:
  NotDivisible(std::string symbol, std::string coefficient, std::string divisor)
      : Error("coefficient " + coefficient + " of " + symbol +
              " is not divisible by " + divisor + " in the coefficient ring"),
        symbol_(std::move(symbol)),
        coefficient_(std::move(coefficient)),
        divisor_(std::move(divisor)) {}

  const std::string& symbol() const { return symbol_; }
  const std::string& coefficient() const { return coefficient_; }
  const std::string& divisor() const { return divisor_; }

 private:
  std::string symbol_;
  std::string coefficient_;
  std::string divisor_;
};

}  // namespace motkit
