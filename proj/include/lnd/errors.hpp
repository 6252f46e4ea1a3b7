#ifndef LND_ERRORS_HPP
#define LND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InvalidRing : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  explicit ExponentOverflow(unsigned long cap)
      : Error("exponent exceeds cap " + std::to_string(cap)) {}
};

class NoGrading : public Error {
 public:
  NoGrading() : Error("ring carries no grading") {}
};

/// Thrown by exact division; `witness()` is a term that blocks the division.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(std::string witness)
      : Error("not divisible: witness term " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class MixedDenominators : public Error {
 public:
  MixedDenominators() : Error("Laurent elements use different denominator variables") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Positioned syntax error from the polynomial grammar.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        message_(std::move(message)),
        position_(position) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

class NegativeExponent : public ParseError {
 public:
  explicit NegativeExponent(std::size_t position)
      : ParseError("negative exponent", position) {}
};

class ParseUnknownVariable : public ParseError {
 public:
  ParseUnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(int cap)
      : Error("nilpotency not reached within cap " + std::to_string(cap)) {}
};

class DenomNotConstant : public Error {
 public:
  explicit DenomNotConstant(const std::string& var)
      : Error("denominator variable '" + var + "' is not a constant of the derivation") {}
};

class SliceInvalid : public Error {
 public:
  explicit SliceInvalid(const std::string& what) : Error("invalid slice: " + what) {}
};

class NonInvariantCandidate : public Error {
 public:
  explicit NonInvariantCandidate(std::string witness)
      : Error("candidate is not invariant: " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// P(candidates) failed to vanish modulo the localization variable.
class DivisionImpossible : public Error {
 public:
  explicit DivisionImpossible(const std::string& what)
      : Error("relation image not divisible by localization variable: " + what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace lnd

#endif  // LND_ERRORS_HPP
