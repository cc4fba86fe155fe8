#pragma once

#include <cstdint>

#include "irn/checked.hpp"
#include "irn/divisors.hpp"
#include "irn/factorization.hpp"
#include "irn/rational.hpp"

namespace irn {

/// sigma_{e,alpha}(n) and sigma_{o,alpha}(n): alpha-th power sums over the
/// divisors at even and odd 1-based positions of the ascending divisor list.
/// Both are exact; for alpha >= 0 they are integers (den = 1).
struct ParitySums {
  std::uint64_t n = 1;
  int alpha = 1;
  Rational sigma_e;
  Rational sigma_o;

  /// The classical sigma_alpha(n).
  Rational total() const { return sigma_e + sigma_o; }
  friend bool operator==(const ParitySums&, const ParitySums&) = default;
};

struct TauParity {
  std::uint64_t tau_e = 0;
  std::uint64_t tau_o = 0;
  friend bool operator==(const TauParity&, const TauParity&) = default;
};

struct RealParitySums {
  double sigma_e = 0;
  double sigma_o = 0;
};

ParitySums parity_sums_int(const DivisorList& divisors, int alpha);
ParitySums parity_sums_int(std::uint64_t n, int alpha);

/// Closed form for p^l. alpha = 0 throws AlphaZeroError; a composite p or
/// l = 0 throws DomainError. Evaluated in arbitrary precision and narrowed,
/// so only the result has to fit the 128-bit width.
ParitySums prime_power_closed_form(std::uint64_t p, unsigned l, int alpha);

TauParity tau_parity(std::uint64_t n);

/// Floating-point sums for real alpha. Complex exponents are not supported.
RealParitySums parity_sums_real(std::uint64_t n, double alpha);

/// Everything the scan pipeline needs about one integer.
struct DivisorProfile {
  std::uint64_t n = 1;
  DivisorList divisors;
  std::uint64_t tau = 1;
  wide_int sigma_e = 0;
  wide_int sigma_o = 1;
  /// sigma_e / sigma_o in canonical form.
  Rational k;

  bool is_index_ratio() const noexcept { return k.is_integer(); }
  bool is_square() const noexcept { return tau % 2 == 1; }
};

DivisorProfile make_profile(const Factorization& f);
DivisorProfile profile(std::uint64_t n);

/// k(n) = sigma_e(n) / sigma_o(n); k(1) = 0.
Rational k_ratio(std::uint64_t n);
Rational k_ratio(const Factorization& f);

}  // namespace irn
