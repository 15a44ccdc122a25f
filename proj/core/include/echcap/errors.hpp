#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace echcap {

// Base of every error this library raises on purpose. Anything else escaping
// (std::bad_alloc, ...) is a bug or an environment failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the range of the 64-bit backing integers.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// Sequences with index origin 1 (full spectra) do not combine under
// disjoint union, and dominance needs equal origins.
class MismatchedIndexOrigin : public Error {
 public:
  using Error::Error;
};

// An approximate comparison fell inside the combined error bound.
class ApproxTie : public Error {
 public:
  ApproxTie(const std::string& what, std::int64_t k) : Error(what), k_(k) {}
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
};

class ToricEnumerationBudgetExceeded : public Error {
 public:
  ToricEnumerationBudgetExceeded(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

// Raised by the construction-time checks on capacity sequences.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace echcap
