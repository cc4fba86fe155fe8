#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "irn/factorization.hpp"

namespace irn {

/// Divisors of n in strictly increasing order: d_1 = 1 < ... < d_tau = n.
class DivisorList {
 public:
  DivisorList() : n_(1), divisors_{1} {}

  std::uint64_t value() const noexcept { return n_; }
  std::span<const std::uint64_t> divisors() const noexcept { return divisors_; }
  std::size_t size() const noexcept { return divisors_.size(); }

  /// d_i with 1-based rank, matching the usual d_1 < d_2 < ... notation.
  std::uint64_t rank(std::size_t i) const { return divisors_.at(i - 1); }
  /// d_2, the smallest prime factor; 0 when n = 1.
  std::uint64_t second() const noexcept { return divisors_.size() > 1 ? divisors_[1] : 0; }

  friend bool operator==(const DivisorList&, const DivisorList&) = default;

 private:
  friend DivisorList divisors_sorted(const Factorization& f);
  DivisorList(std::uint64_t n, std::vector<std::uint64_t> divisors) : n_(n), divisors_(std::move(divisors)) {}

  std::uint64_t n_;
  std::vector<std::uint64_t> divisors_;
};

/// Mixed-radix expansion of the factorization followed by a sort.
DivisorList divisors_sorted(const Factorization& f);

}  // namespace irn
