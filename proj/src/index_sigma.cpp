#include "irn/index_sigma.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "irn/errors.hpp"

namespace irn {

namespace {

namespace mp = boost::multiprecision;

wide_int narrow(const mp::cpp_int& value) {
  static const mp::cpp_int kMax = [] {
    mp::cpp_int m = 1;
    m <<= 127;
    return m - 1;
  }();
  if (value > kMax || value < -kMax) throw OverflowError("closed form result exceeds 128 bits");
  wide_uint magnitude = 0;
  mp::cpp_int rest = mp::abs(value);
  // Two 64-bit limbs.
  const mp::cpp_int high = rest >> 64;
  const mp::cpp_int low = rest & mp::cpp_int(0xFFFFFFFFFFFFFFFFull);
  magnitude = static_cast<wide_uint>(high.convert_to<std::uint64_t>()) << 64;
  magnitude |= low.convert_to<std::uint64_t>();
  wide_int out = static_cast<wide_int>(magnitude);
  return value < 0 ? -out : out;
}

Rational narrow(const mp::cpp_rational& value) {
  return Rational::of(narrow(mp::numerator(value)), narrow(mp::denominator(value)));
}

mp::cpp_rational rational_pow(const mp::cpp_rational& base, unsigned exponent) {
  return mp::cpp_rational(mp::pow(mp::numerator(base), exponent), mp::pow(mp::denominator(base), exponent));
}

}  // namespace

ParitySums parity_sums_int(const DivisorList& divisors, int alpha) {
  const auto ds = divisors.divisors();
  const std::uint64_t n = divisors.value();
  wide_int even = 0, odd = 0;
  if (alpha >= 0) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
      wide_int term = checked_pow(ds[i], static_cast<unsigned>(alpha));
      // 0-based odd index is a 1-based even position.
      if (i % 2 == 1)
        even = checked_add(even, term);
      else
        odd = checked_add(odd, term);
    }
    return {n, alpha, Rational::of(even, 1), Rational::of(odd, 1)};
  }
  // 1/d^m = (n/d)^m / n^m
  const unsigned m = static_cast<unsigned>(-static_cast<long>(alpha));
  const wide_int den = checked_pow(n, m);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    wide_int term = checked_pow(n / ds[i], m);
    if (i % 2 == 1)
      even = checked_add(even, term);
    else
      odd = checked_add(odd, term);
  }
  return {n, alpha, Rational::of(even, den), Rational::of(odd, den)};
}

ParitySums parity_sums_int(std::uint64_t n, int alpha) {
  return parity_sums_int(divisors_sorted(factorize(n)), alpha);
}

ParitySums prime_power_closed_form(std::uint64_t p, unsigned l, int alpha) {
  if (alpha == 0) throw AlphaZeroError();
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (l == 0) throw DomainError("exponent l must be positive");
  const unsigned m = static_cast<unsigned>(alpha > 0 ? alpha : -static_cast<long>(alpha));
  const mp::cpp_int pm = mp::pow(mp::cpp_int(p), m);
  const mp::cpp_rational pa = alpha > 0 ? mp::cpp_rational(pm) : mp::cpp_rational(mp::cpp_int(1), pm);
  const mp::cpp_rational denom = rational_pow(pa, 2) - 1;
  mp::cpp_rational even, odd;
  if (l % 2 == 1) {
    even = pa * (rational_pow(pa, l + 1) - 1) / denom;
    odd = (rational_pow(pa, l + 1) - 1) / denom;
  } else {
    even = pa * (rational_pow(pa, l) - 1) / denom;
    odd = (rational_pow(pa, l + 2) - 1) / denom;
  }
  return {checked_pow_u64(p, l), alpha, narrow(even), narrow(odd)};
}

TauParity tau_parity(std::uint64_t n) {
  const std::uint64_t tau = factorize(n).divisor_count();
  if (tau % 2 == 1) return {(tau - 1) / 2, (tau + 1) / 2};
  return {tau / 2, tau / 2};
}

RealParitySums parity_sums_real(std::uint64_t n, double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  const auto list = divisors_sorted(factorize(n));
  const auto ds = list.divisors();
  RealParitySums out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    double term = std::pow(static_cast<double>(ds[i]), alpha);
    (i % 2 == 1 ? out.sigma_e : out.sigma_o) += term;
  }
  return out;
}

DivisorProfile make_profile(const Factorization& f) {
  DivisorProfile out;
  out.n = f.value();
  out.divisors = divisors_sorted(f);
  out.tau = out.divisors.size();
  const auto ds = out.divisors.divisors();
  wide_int even = 0, odd = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i % 2 == 1)
      even = checked_add(even, ds[i]);
    else
      odd = checked_add(odd, ds[i]);
  }
  out.sigma_e = even;
  out.sigma_o = odd;
  out.k = Rational::of(even, odd);
  return out;
}

DivisorProfile profile(std::uint64_t n) { return make_profile(factorize(n)); }

Rational k_ratio(const Factorization& f) { return make_profile(f).k; }

Rational k_ratio(std::uint64_t n) { return k_ratio(factorize(n)); }

}  // namespace irn
