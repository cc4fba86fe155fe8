#include "irn/theorem_lab.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "irn/checked.hpp"
#include "irn/errors.hpp"
#include "irn/index_sigma.hpp"
#include "irn/parallel.hpp"

namespace irn {

namespace {

constexpr std::array<int, 6> kAlphaGrid = {-2, -1, 0, 1, 2, 3};

Rational frac(wide_int num, wide_int den) { return Rational::of(num, den); }

std::string str(const Rational& r) { return r.to_string(); }

bool prime_integral(const Rational& k) {
  return k.is_integer() && k.num() <= static_cast<wide_int>(UINT64_MAX) &&
         is_prime(static_cast<std::uint64_t>(k.num()));
}

Rational power_ratio(std::uint64_t p, int alpha) {
  if (alpha >= 0) return frac(checked_pow(p, static_cast<unsigned>(alpha)), 1);
  return frac(1, checked_pow(p, static_cast<unsigned>(-alpha)));
}

/// d_2 + 1/d_2
Rational upper_bound_of(std::uint64_t d2) { return frac(checked_add(checked_mul(d2, d2), 1), d2); }

/// d_2 / (d_2^2 + 1)
Rational lower_bound_of(std::uint64_t d2) { return frac(d2, checked_add(checked_mul(d2, d2), 1)); }

bool eq3_holds(const DivisorProfile& prof, std::uint64_t p) {
  for (int alpha : kAlphaGrid) {
    const ParitySums s = parity_sums_int(prof.divisors, alpha);
    if (alpha == 0) {
      if (s.sigma_e != s.sigma_o) return false;
    } else if (s.sigma_e != power_ratio(p, alpha) * s.sigma_o) {
      return false;
    }
  }
  return true;
}

SigmaBoundsResult sigma_bounds_of(const DivisorProfile& prof) {
  const wide_int n = prof.n;
  const wide_int tau = prof.tau;
  const Rational sigma_e = frac(prof.sigma_e, 1);
  const Rational inv_sum = parity_sums_int(prof.divisors, -1).sigma_e;  // sigma_{e,-1}
  const Rational reciprocal = Rational(1) / inv_sum;
  const wide_int mixed = checked_add(checked_mul(tau - 2, n), 4);  // (tau - 2) n + 4

  SigmaBoundsResult r;
  r.sigma_e_lower = frac(tau - 2 + n, 1) <= sigma_e;
  r.sigma_e_upper = checked_mul(4, prof.sigma_e) <= checked_mul(tau + 2, n);
  r.reciprocal_lower = frac(checked_mul(4, n), mixed) <= reciprocal;
  r.reciprocal_upper = reciprocal <= frac(n, tau - 1);
  r.k_identity = prof.k == sigma_e / (Rational(prof.n) * inv_sum);
  r.k_lower = frac(checked_mul(4, tau - 2 + n), mixed) <= prof.k;
  r.k_upper = prof.k <= frac(checked_mul(n, tau + 2), checked_mul(4, tau - 1));
  if (prof.tau == 2) r.prime_k_is_n = prof.k == Rational(prof.n);
  if (prof.tau == 4) {
    r.tau4_lower = Rational(2) <= prof.k;
    r.tau4_upper = prof.k <= frac(n, 4);
  }
  if (prof.tau == 6) {
    r.tau6_lower = frac(n + 4, n + 1) <= prof.k;
    r.tau6_upper = prof.k <= frac(2 * n, 5);
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Factorization squared(const Factorization& root) {
  std::vector<PrimePower> factors(root.factors().begin(), root.factors().end());
  for (auto& f : factors) f.exponent *= 2;
  return Factorization::from_factors(std::move(factors));
}

struct PrimePowerEntry {
  std::uint64_t n;
  std::uint64_t p;
  unsigned l;
};

/// p^l <= hi with l even >= 2, ordered by value.
std::vector<PrimePowerEntry> even_prime_powers(std::uint64_t hi) {
  std::vector<PrimePowerEntry> out;
  const std::uint64_t root = isqrt(hi);
  if (root < 2) return out;
  for (std::uint64_t p : SieveTable(root).primes()) {
    std::uint64_t value = p * p;
    for (unsigned l = 2;; l += 2) {
      out.push_back({value, p, l});
      if (value > hi / (p * p)) break;
      value *= p * p;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return out;
}

ScanReport blank_report(CheckId id, std::uint64_t lo, std::uint64_t hi) {
  ScanReport r;
  r.check = std::string(check_name(id));
  r.lo = lo;
  r.hi = hi;
  return r;
}

void violation(ScanReport& r, std::uint64_t n, std::string expected, std::string actual) {
  r.violations.push_back({n, std::move(expected), std::move(actual)});
}

// ---- per-n evaluation for checks that visit every integer -------------------

void eval_upper_bound(const Factorization& f, ScanReport& r) {
  if (f.value() < 2 || f.is_perfect_square()) return;
  const DivisorProfile prof = make_profile(f);
  ++r.applicable;
  const Rational bound = upper_bound_of(prof.divisors.second());
  if (!(prof.k < bound)) violation(r, prof.n, "k < d_2 + 1/d_2 = " + str(bound), "k = " + str(prof.k));
}

void eval_sigma_bounds(const Factorization& f, ScanReport& r) {
  if (f.value() < 2 || f.is_perfect_square()) return;
  const DivisorProfile prof = make_profile(f);
  ++r.applicable;
  const SigmaBoundsResult b = sigma_bounds_of(prof);
  const std::string k = "k = " + str(prof.k) + ", tau = " + std::to_string(prof.tau);
  auto clause = [&](bool ok, const char* name) {
    if (!ok) violation(r, prof.n, name, k);
  };
  clause(b.sigma_e_lower, "tau - 2 + n <= sigma_e");
  clause(b.sigma_e_upper, "sigma_e <= (tau + 2) n / 4");
  clause(b.reciprocal_lower, "4n / ((tau - 2) n + 4) <= 1 / sigma_{e,-1}");
  clause(b.reciprocal_upper, "1 / sigma_{e,-1} <= n / (tau - 1)");
  clause(b.k_identity, "k = sigma_e / (n sigma_{e,-1})");
  clause(b.k_lower, "4 (tau - 2 + n) / ((tau - 2) n + 4) <= k");
  clause(b.k_upper, "k <= (n / 4) (tau + 2) / (tau - 1)");
  clause(b.prime_k_is_n.value_or(true), "prime n: k = n");
  clause(b.tau4_lower.value_or(true), "tau = 4: 2 <= k");
  clause(b.tau6_lower.value_or(true), "tau = 6: (n + 4) / (n + 1) <= k");
  clause(b.tau6_upper.value_or(true), "tau = 6: k <= 2n / 5");
  if (!b.tau4_upper.value_or(true)) {
    r.discrepancies.push_back({prof.n, "tau = 4: k <= n / 4", k});
    ++r.tallies["tau4_upper_clause_failures"];
  }
}

void eval_multiplier(const Factorization& f, ScanReport& r) {
  if (f.value() < 2 || f.is_perfect_square()) return;
  const Rational k = k_ratio(f);
  const std::uint64_t p = next_prime(f.value());
  for (std::uint32_t a = 1; a <= 3; ++a) {
    Rational extended;
    try {
      extended = k_ratio(f.times_prime_power(p, a));
    } catch (const OverflowError&) {
      ++r.tallies["skipped_overflow"];
      continue;
    }
    ++r.applicable;
    if (extended != k)
      violation(r, f.value(), "k(n p^a) = k(n) = " + str(k),
                "p = " + std::to_string(p) + ", a = " + std::to_string(a) + ", k(n p^a) = " + str(extended));
  }
}

void eval_pairing(const Factorization& f, ScanReport& r) {
  if (f.value() < 2 || f.divisor_count() > 8) return;
  const DivisorProfile prof = make_profile(f);
  if (!prime_integral(prof.k)) return;
  ++r.applicable;
  const auto p = static_cast<std::uint64_t>(prof.k.num());
  if (!divisors_pair_by(prof.divisors, p))
    violation(r, prof.n, "d_{2j} = " + str(prof.k) + " d_{2j-1} for all j", "pairing broken");
  if (!eq3_holds(prof, p))
    violation(r, prof.n, "sigma_{e,alpha} = " + str(prof.k) + "^alpha sigma_{o,alpha}", "identity fails");
}

void eval_conjecture1(const Factorization& f, ScanReport& r) {
  if (f.value() < 2) return;
  const DivisorProfile prof = make_profile(f);
  if (!prof.k.is_integer()) return;
  ++r.applicable;
  const std::string actual = "k = " + str(prof.k);
  const std::uint64_t d2 = prof.divisors.second();
  if (prof.k != Rational(d2)) violation(r, prof.n, "k = d_2 = " + std::to_string(d2), actual);
  if (prof.n % 2 == 0 && prof.k != Rational(2)) violation(r, prof.n, "even n: k = 2", actual);
  if (prof.n % 2 == 1 && prof.tau % 4 == 2 && prof.n % 3 == 0 && prof.k != Rational(3))
    violation(r, prof.n, "odd n, tau = 2 mod 4, 3 | n: k = 3", actual);
}

void eval_conjecture2(const Factorization& f, ScanReport& r) {
  if (f.value() < 2) return;
  const DivisorProfile prof = make_profile(f);
  if (!prime_integral(prof.k)) return;
  ++r.applicable;
  if (!divisors_pair_by(prof.divisors, static_cast<std::uint64_t>(prof.k.num())))
    violation(r, prof.n, "d_{2j} = " + str(prof.k) + " d_{2j-1} for all j",
              "pairing broken, tau = " + std::to_string(prof.tau));
}

using DenseEvaluator = void (*)(const Factorization&, ScanReport&);

DenseEvaluator dense_evaluator(CheckId id) {
  switch (id) {
    case CheckId::upper_bound:
      return eval_upper_bound;
    case CheckId::sigma_bounds:
      return eval_sigma_bounds;
    case CheckId::multiplier:
      return eval_multiplier;
    case CheckId::pairing:
      return eval_pairing;
    case CheckId::conjecture1:
      return eval_conjecture1;
    case CheckId::conjecture2:
      return eval_conjecture2;
    default:
      return nullptr;
  }
}

ScanReport dense_scan(CheckId id, std::uint64_t lo, std::uint64_t hi, const ScanOptions& options) {
  const DenseEvaluator eval = dense_evaluator(id);
  const RangeFactorizer factorizer(hi, options.sieve);
  auto parts = run_chunks(split_range(lo, hi, options.chunk_size), options.workers, [&](const ClosedRange& c) {
    ScanReport part = blank_report(id, c.lo, c.hi);
    for (const auto& f : factorizer.block(c.lo, c.hi)) eval(f, part);
    return part;
  });
  ScanReport out = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) out = merge_reports(std::move(out), std::move(parts[i]));
  return out;
}

// ---- checks over sparse domains (squares, prime powers) ---------------------

ScanReport lower_bound_scan(std::uint64_t lo, std::uint64_t hi) {
  ScanReport r = blank_report(CheckId::lower_bound, lo, hi);
  for (std::uint64_t root = std::max<std::uint64_t>(isqrt(lo - 1) + 1, 2); root <= isqrt(hi); ++root) {
    const DivisorProfile prof = make_profile(squared(factorize(root)));
    ++r.applicable;
    const Rational bound = lower_bound_of(prof.divisors.second());
    const bool holds = prof.k >= bound, equality = prof.k == bound, prime_square = is_prime(root);
    if (equality) ++r.tallies["equality_cases"];
    if (prime_square) ++r.tallies["prime_squares"];
    const std::string actual = "k = " + str(prof.k);
    if (!holds) violation(r, prof.n, "k >= d_2 / (d_2^2 + 1) = " + str(bound), actual);
    if (equality && !prime_square) violation(r, prof.n, "equality only at n = p^2", actual);
    if (prime_square && !equality) violation(r, prof.n, "equality at n = p^2: k = " + str(bound), actual);
  }
  return r;
}

ScanReport unit_fraction_scan(std::uint64_t lo, std::uint64_t hi) {
  ScanReport r = blank_report(CheckId::unit_fraction, lo, hi);
  for (const auto& e : even_prime_powers(hi)) {
    if (e.n < lo) continue;
    ++r.applicable;
    if (!check_unit_fraction_gap(e.p, e.l))
      violation(r, e.n, "p/(p^2+1) <= k < 1/p, k = (p^{l+1}-p)/(p^{l+2}-1), not a unit fraction",
                "k = " + str(k_ratio(e.n)));
  }
  return r;
}

/// Shared shape of the prime-power-distinct and conjecture 3 scans: every
/// member of a sparse domain must have a k no smaller member already has.
ScanReport distinct_k_scan(CheckId id, std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::pair<std::uint64_t, Rational>>& domain, const std::string& expected) {
  ScanReport r = blank_report(id, lo, hi);
  std::map<Rational, std::uint64_t> first_seen;
  for (const auto& [n, k] : domain) {
    auto [it, inserted] = first_seen.emplace(k, n);
    if (n < lo) continue;
    ++r.applicable;
    if (!inserted) violation(r, n, expected, "k = " + str(k) + " = k(" + std::to_string(it->second) + ")");
  }
  return r;
}

ScanReport prime_power_distinct_scan(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::pair<std::uint64_t, Rational>> domain;
  for (const auto& e : even_prime_powers(hi))
    domain.emplace_back(e.n, k_ratio(Factorization::from_factors({{e.p, e.l}})));
  return distinct_k_scan(CheckId::prime_power_distinct, lo, hi, domain,
                         "k differs from every smaller even prime power");
}

ScanReport conjecture3_scan(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::pair<std::uint64_t, Rational>> domain;
  domain.emplace_back(1, Rational());
  for (std::uint64_t root = 2; root <= isqrt(hi); ++root) {
    const Factorization f = squared(factorize(root));
    domain.emplace_back(f.value(), k_ratio(f));
  }
  ScanReport r = distinct_k_scan(CheckId::conjecture3, lo, hi, domain, "k < 1 class is a singleton");
  r.notes.push_back(
      "domain restricted to n = 1 and perfect squares: these are exactly the n with k(n) < 1, since "
      "sigma_e < sigma_o iff n is a square");
  return r;
}

void add_notes(CheckId id, ScanReport& r) {
  switch (id) {
    case CheckId::conjecture1:
      r.notes.push_back("n = 1 (k = 0) excluded: d_2 does not exist");
      break;
    case CheckId::sigma_bounds:
      r.notes.push_back("the tau = 4 clause k <= n/4 is reported as a discrepancy, not asserted (it fails at n = 6)");
      break;
    case CheckId::multiplier:
      r.notes.push_back(
          "n = 1 and perfect squares excluded (the statement needs tau(n) even; k(1) = 0 is degenerate); "
          "p is the least prime above n, a in {1, 2, 3}; "
          "instances leaving 64 bits are skipped");
      break;
    case CheckId::pairing:
      r.notes.push_back("applies to n with prime integral k and tau(n) <= 8; alpha in {-2, -1, 0, 1, 2, 3}");
      break;
    case CheckId::conjecture2:
      r.notes.push_back("applies to every n with prime integral k, no bound on tau(n)");
      break;
    default:
      break;
  }
}

}  // namespace

bool check_upper_bound(std::uint64_t n) {
  if (n < 2 || is_perfect_square(n)) throw InapplicableError("upper bound applies to non-square n >= 2");
  const DivisorProfile prof = profile(n);
  return prof.k < upper_bound_of(prof.divisors.second());
}

Rational p2q_closed_form(std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_prime(q);
  const wide_int wp = p, wq = q;
  if (wq <= wp * wp) throw DomainError("q must exceed p^2");
  const wide_int den = checked_add(checked_add(checked_mul(wp, wq), wp * wp), 1);
  // p + (q - p^3)/den as a single fraction; the sum is positive.
  const wide_int num = checked_add(checked_mul(wp, den), checked_sub(wq, checked_pow(wp, 3)));
  return frac(num, den);
}

bool check_upper_bound_optimality(std::uint64_t p, std::span<const std::uint64_t> qs) {
  require_prime(p);
  const Rational limit = upper_bound_of(p);
  std::optional<Rational> previous;
  std::uint64_t previous_q = 0;
  bool ok = true;
  for (std::uint64_t q : qs) {
    if (q <= previous_q) throw DomainError("q list must be strictly ascending");
    previous_q = q;
    const Rational closed = p2q_closed_form(p, q);
    const Rational k = k_ratio(Factorization::from_factors({{p, 2}, {q, 1}}));
    ok = ok && k == closed && k < limit && (!previous || *previous < k);
    previous = k;
  }
  return ok;
}

LowerBoundResult check_lower_bound(std::uint64_t n) {
  if (n < 4 || !is_perfect_square(n)) throw InapplicableError("lower bound applies to perfect squares n >= 4");
  const DivisorProfile prof = profile(n);
  const Rational bound = lower_bound_of(prof.divisors.second());
  return {prof.k >= bound, prof.k == bound, is_prime(isqrt(n))};
}

bool SigmaBoundsResult::asserted_hold() const noexcept {
  return sigma_e_lower && sigma_e_upper && reciprocal_lower && reciprocal_upper && k_identity && k_lower &&
         k_upper && prime_k_is_n.value_or(true) && tau4_lower.value_or(true) && tau6_lower.value_or(true) &&
         tau6_upper.value_or(true);
}

SigmaBoundsResult check_sigma_bounds(std::uint64_t n) {
  if (n < 2 || is_perfect_square(n)) throw InapplicableError("sigma bounds apply to non-square n >= 2");
  return sigma_bounds_of(profile(n));
}

bool check_multiplier(std::uint64_t n, std::uint64_t p, std::uint32_t a) {
  if (n == 0) throw DomainError("n must be positive");
  if (n == 1) throw InapplicableError("n = 1 is degenerate: k(1) = 0 but k(p^a) = p");
  if (is_perfect_square(n)) throw InapplicableError("the multiplier statement needs tau(n) even (n not a square)");
  if (a == 0) throw DomainError("a must be at least 1");
  require_prime(p);
  if (p <= n) throw DomainError("p must exceed n");
  const Factorization f = factorize(n);
  return k_ratio(f.times_prime_power(p, a)) == k_ratio(f);
}

bool check_multiplier_chain(std::uint64_t n, const Factorization& m) {
  if (n == 0) throw DomainError("n must be positive");
  if (n == 1) throw InapplicableError("n = 1 is degenerate: k(1) = 0");
  if (is_perfect_square(n)) throw InapplicableError("the multiplier statement needs tau(n) even (n not a square)");
  if (m.value() == 1) throw DomainError("m must exceed 1");
  std::uint64_t bound = n;
  std::size_t index = 0;
  for (const auto& [p, e] : m.factors()) {
    ++index;
    if (bound >= p)
      throw HypothesisViolation(index, "hypothesis fails at i = " + std::to_string(index) + ": " +
                                           std::to_string(bound) + " >= p_i = " + std::to_string(p));
    bound = checked_mul_u64(bound, checked_pow_u64(p, e));
  }
  std::uint64_t current = n;
  bool ok = true;
  for (const auto& [p, e] : m.factors()) {
    ok = check_multiplier(current, p, e) && ok;
    current = checked_mul_u64(current, checked_pow_u64(p, e));
  }
  return ok;
}

bool divisors_pair_by(const DivisorList& divisors, std::uint64_t p) {
  const auto ds = divisors.divisors();
  if (ds.size() % 2 != 0) return false;
  for (std::size_t j = 0; j < ds.size(); j += 2)
    if (static_cast<wide_uint>(ds[j]) * p != ds[j + 1]) return false;
  return true;
}

bool check_pairing(std::uint64_t n) {
  const DivisorProfile prof = profile(n);
  if (!prime_integral(prof.k)) throw InapplicableError("k(" + std::to_string(n) + ") = " + str(prof.k) + " is not a prime");
  if (prof.tau > 8) throw InapplicableError("tau(" + std::to_string(n) + ") > 8");
  const auto p = static_cast<std::uint64_t>(prof.k.num());
  return divisors_pair_by(prof.divisors, p) && eq3_holds(prof, p);
}

std::uint64_t extend_with_prime(std::uint64_t n, std::uint64_t q) {
  const DivisorProfile prof = profile(n);
  if (prof.tau != 6) throw DomainError("tau(" + std::to_string(n) + ") must be 6");
  if (!prime_integral(prof.k)) throw DomainError("k(" + std::to_string(n) + ") = " + str(prof.k) + " is not a prime");
  require_prime(q);
  if (q <= n) throw DomainError("q must exceed n");
  const auto p = static_cast<std::uint64_t>(prof.k.num());

  const Factorization extended = factorize(n).times_prime_power(q, 1);
  const DivisorList list = divisors_sorted(extended);
  if (list.size() != 12) throw CheckFailure("tau(qn) is not 12");
  if (!divisors_pair_by(list, p)) throw CheckFailure("qn does not pair by p");
  const auto& d = prof.divisors;
  const std::vector<std::uint64_t> expected = {
      d.rank(1),     d.rank(2),         d.rank(3),     d.rank(2) * d.rank(3),     d.rank(5),     d.rank(2) * d.rank(5),
      q,             d.rank(2) * q,     d.rank(3) * q, d.rank(2) * d.rank(3) * q, d.rank(5) * q, d.rank(2) * d.rank(5) * q};
  if (!std::equal(expected.begin(), expected.end(), list.divisors().begin()))
    throw CheckFailure("divisors of qn do not interleave as d1, d2, d3, d2d3, d5, d2d5, q, ...");
  return extended.value();
}

bool check_unit_fraction_gap(std::uint64_t p, unsigned l) {
  if (l == 0 || l % 2 != 0) throw DomainError("l must be even and at least 2");
  require_prime(p);
  const Rational k = k_ratio(Factorization::from_factors({{p, l}}));
  const wide_int wp = p;
  const Rational formula =
      frac(checked_sub(checked_pow(wp, l + 1), wp), checked_sub(checked_pow(wp, l + 2), 1));
  const Rational lower = lower_bound_of(p);
  return k == formula && lower <= k && k < frac(1, wp) && frac(1, wp + 1) < lower && !k.is_unit_fraction() &&
         k.num() > 1;
}

std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::upper_bound:
      return "upper-bound";
    case CheckId::lower_bound:
      return "lower-bound";
    case CheckId::sigma_bounds:
      return "sigma-bounds";
    case CheckId::multiplier:
      return "multiplier";
    case CheckId::pairing:
      return "pairing";
    case CheckId::prime_power_distinct:
      return "prime-power-distinct";
    case CheckId::unit_fraction:
      return "unit-fraction";
    case CheckId::conjecture1:
      return "conjecture-1";
    case CheckId::conjecture2:
      return "conjecture-2";
    case CheckId::conjecture3:
      return "conjecture-3";
  }
  return "";
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (auto id : {CheckId::upper_bound, CheckId::lower_bound, CheckId::sigma_bounds, CheckId::multiplier,
                  CheckId::pairing, CheckId::prime_power_distinct, CheckId::unit_fraction, CheckId::conjecture1,
                  CheckId::conjecture2, CheckId::conjecture3})
    if (check_name(id) == name) return id;
  return std::nullopt;
}

std::uint64_t default_lower(CheckId id) {
  switch (id) {
    case CheckId::lower_bound:
    case CheckId::prime_power_distinct:
    case CheckId::unit_fraction:
      return 4;
    case CheckId::conjecture3:
      return 1;
    default:
      return 2;
  }
}

ScanReport run_check(CheckId id, std::uint64_t lo, std::uint64_t hi, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (lo == 0) throw DomainError("scan ranges start at 1");
  ScanReport report;
  if (lo > hi) {
    report = blank_report(id, lo, hi);
  } else {
    switch (id) {
      case CheckId::lower_bound:
        report = lower_bound_scan(lo, hi);
        break;
      case CheckId::unit_fraction:
        report = unit_fraction_scan(lo, hi);
        break;
      case CheckId::prime_power_distinct:
        report = prime_power_distinct_scan(lo, hi);
        break;
      case CheckId::conjecture3:
        report = conjecture3_scan(lo, hi);
        break;
      default:
        report = dense_scan(id, lo, hi, options);
        break;
    }
  }
  add_notes(id, report);
  report.finalize();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanReport check_prime_power_distinct(std::uint64_t limit, const ScanOptions& options) {
  if (limit < 4) throw DomainError("limit must be at least 4");
  return run_check(CheckId::prime_power_distinct, 4, limit, options);
}

ScanReport scan_conjecture1(std::uint64_t limit, const ScanOptions& options) {
  if (limit < 2) throw DomainError("limit must be at least 2");
  return run_check(CheckId::conjecture1, 2, limit, options);
}

ScanReport scan_conjecture2(std::uint64_t limit, const ScanOptions& options) {
  if (limit < 2) throw DomainError("limit must be at least 2");
  return run_check(CheckId::conjecture2, 2, limit, options);
}

ScanReport scan_conjecture3(std::uint64_t limit, const ScanOptions& options) {
  if (limit < 1) throw DomainError("limit must be at least 1");
  return run_check(CheckId::conjecture3, 1, limit, options);
}

bool recheck(CheckId id, const Violation& violation) {
  return !run_check(id, violation.n, violation.n).violations.empty();
}

}  // namespace irn
