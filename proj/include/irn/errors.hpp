#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irn {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (n = 0, composite where a prime
/// is required, zero denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// alpha = 0 passed to the prime-power closed form; the tau counts serve it.
class AlphaZeroError : public DomainError {
 public:
  AlphaZeroError()
      : DomainError("alpha = 0 is outside the closed form; use tau counts") {}
};

/// Merging tables whose ranges overlap or leave a gap.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A value left the 128-bit working width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Sieve construction refused because the table would exceed the memory ceiling.
class SieveAllocationError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the statement being checked (e.g. a perfect square
/// handed to the upper-bound check).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// A chain hypothesis failed at a specific prime index (1-based).
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A post-condition that a construction must satisfy did not hold.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

/// Missing, corrupted, or mismatched checkpoint file.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace irn
