#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace irn {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// n together with its prime factorization, primes strictly increasing.
/// The empty factor list is n = 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates ordering, exponents and primality and computes n (checked).
  static Factorization from_factors(std::vector<PrimePower> factors);

  std::uint64_t value() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }

  /// tau(n) = prod (m_i + 1).
  std::uint64_t divisor_count() const noexcept;
  bool is_perfect_square() const noexcept;
  bool is_prime() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }
  bool is_prime_power() const noexcept { return factors_.size() == 1; }
  std::uint64_t smallest_prime() const noexcept { return factors_.empty() ? 0 : factors_.front().prime; }
  std::uint64_t largest_prime() const noexcept { return factors_.empty() ? 0 : factors_.back().prime; }

  /// n * p^a for a prime p larger than every prime of n. Throws DomainError
  /// on ordering and OverflowError if n * p^a leaves 64 bits.
  Factorization times_prime_power(std::uint64_t p, std::uint32_t a) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend class SieveTable;
  friend class RangeFactorizer;
  friend Factorization factorize(std::uint64_t n);

  Factorization(std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {}

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Trial division by 2 and odd candidates up to sqrt(n). Throws DomainError
/// for n = 0.
Factorization factorize(std::uint64_t n);

/// Smallest-prime-factor table over [0, limit]; immutable once built.
class SieveTable {
 public:
  static constexpr std::size_t kDefaultMemoryCeiling = std::size_t{1} << 31;

  /// limit >= 2. Throws SieveAllocationError if the table would exceed
  /// memory_ceiling bytes or allocation fails.
  explicit SieveTable(std::uint64_t limit, std::size_t memory_ceiling = kDefaultMemoryCeiling);

  std::uint64_t limit() const noexcept { return spf_.size() - 1; }
  bool covers(std::uint64_t m) const noexcept { return m <= limit(); }

  /// 2 <= m <= limit; a prime maps to itself.
  std::uint64_t smallest_prime_factor(std::uint64_t m) const;
  Factorization factorize(std::uint64_t m) const;

  /// All primes <= limit, ascending.
  std::vector<std::uint64_t> primes() const;

 private:
  std::vector<std::uint32_t> spf_;
};

/// Produces factorizations for contiguous blocks of [1, hi]. Uses the sieve
/// when it covers hi; otherwise sieves each block with the primes up to
/// sqrt(hi). Thread-safe after construction.
class RangeFactorizer {
 public:
  explicit RangeFactorizer(std::uint64_t hi, const SieveTable* sieve = nullptr);

  /// Factorizations of lo, lo+1, ..., hi_block (1 <= lo <= hi_block <= hi).
  std::vector<Factorization> block(std::uint64_t lo, std::uint64_t hi_block) const;

 private:
  std::uint64_t hi_;
  const SieveTable* sieve_;
  std::vector<std::uint64_t> base_primes_;
};

}  // namespace irn
