#include <gtest/gtest.h>

#include <set>

#include "irn/errors.hpp"
#include "irn/index_sigma.hpp"
#include "irn/theorem_lab.hpp"
#include "support/oracle.hpp"

namespace irn {
namespace {

std::vector<std::uint64_t> violation_ns(const ScanReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& v : r.violations) out.push_back(v.n);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> primes_above(std::uint64_t floor, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = next_prime(floor); out.size() < count; q = next_prime(q)) out.push_back(q);
  return out;
}

TEST(UpperBound, Examples) {
  EXPECT_TRUE(check_upper_bound(12));
  EXPECT_TRUE(check_upper_bound(15));
  for (std::uint64_t p : {2, 3, 101, 7919}) EXPECT_TRUE(check_upper_bound(p));
  EXPECT_THROW(check_upper_bound(36), InapplicableError);
  EXPECT_THROW(check_upper_bound(1), InapplicableError);
}

TEST(UpperBound, NoViolationsToOneMillion) {
  ScanOptions opts;
  opts.workers = 4;
  const auto r = run_check(CheckId::upper_bound, 2, 1000000, opts);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.applicable, 1000000u - 1 - (1000 - 1));
  EXPECT_NE(r.evidence().find("not a proof"), std::string::npos);
}

TEST(P2QOptimality, Examples) {
  EXPECT_EQ(p2q_closed_form(2, 5), Rational::of(9, 5));
  EXPECT_EQ(k_ratio(20), Rational::of(9, 5));
  EXPECT_EQ(p2q_closed_form(3, 11), Rational::of(113, 43));
  EXPECT_EQ(k_ratio(99), Rational::of(113, 43));
  const std::uint64_t qs[] = {5, 7, 11, 13};
  EXPECT_TRUE(check_upper_bound_optimality(2, qs));
  EXPECT_EQ(p2q_closed_form(2, 7), Rational::of(37, 19));
  EXPECT_EQ(p2q_closed_form(2, 11), Rational::of(19, 9));
  EXPECT_EQ(p2q_closed_form(2, 13), Rational::of(67, 31));
  EXPECT_THROW(p2q_closed_form(2, 3), DomainError);
  const std::uint64_t too_small[] = {3};
  EXPECT_THROW(check_upper_bound_optimality(2, too_small), DomainError);
  const std::uint64_t unordered[] = {7, 5};
  EXPECT_THROW(check_upper_bound_optimality(2, unordered), DomainError);
}

TEST(P2QOptimality, TwentyPrimesForSmallP) {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto qs = primes_above(p * p, 20);
    EXPECT_TRUE(check_upper_bound_optimality(p, qs)) << p;
    Rational previous;
    for (auto q : qs) {
      const auto k = k_ratio(p * p * q);
      ASSERT_EQ(k, p2q_closed_form(p, q));
      ASSERT_LT(previous, k);
      ASSERT_LT(k, Rational::of(p * p + 1, p));
      previous = k;
    }
  }
}

TEST(LowerBound, Examples) {
  const auto nine = check_lower_bound(9);
  EXPECT_TRUE(nine.holds);
  EXPECT_TRUE(nine.equality);
  EXPECT_TRUE(nine.prime_square);
  const auto sixteen = check_lower_bound(16);
  EXPECT_TRUE(sixteen.holds);
  EXPECT_FALSE(sixteen.equality);
  EXPECT_TRUE(sixteen.consistent());
  EXPECT_TRUE(check_lower_bound(36).consistent());
  EXPECT_THROW(check_lower_bound(12), InapplicableError);
  EXPECT_THROW(check_lower_bound(1), InapplicableError);
}

TEST(LowerBound, EqualityExactlyAtPrimeSquaresToOneMillion) {
  const auto r = run_check(CheckId::lower_bound, 4, 1000000);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_EQ(r.applicable, 999u);
  EXPECT_EQ(r.tallies.at("equality_cases"), 168u);
  EXPECT_EQ(r.tallies.at("prime_squares"), 168u);
}

TEST(SigmaBounds, Examples) {
  const auto six = check_sigma_bounds(6);
  EXPECT_TRUE(six.sigma_e_lower);
  EXPECT_TRUE(six.sigma_e_upper);
  ASSERT_TRUE(six.tau4_lower.has_value());
  EXPECT_TRUE(*six.tau4_lower);
  ASSERT_TRUE(six.tau4_upper.has_value());
  EXPECT_FALSE(*six.tau4_upper);
  EXPECT_TRUE(six.asserted_hold());

  const auto prime = check_sigma_bounds(13);
  ASSERT_TRUE(prime.prime_k_is_n.has_value());
  EXPECT_TRUE(*prime.prime_k_is_n);
  EXPECT_TRUE(prime.asserted_hold());

  const auto twelve = check_sigma_bounds(12);
  ASSERT_TRUE(twelve.tau6_lower.has_value());
  EXPECT_TRUE(*twelve.tau6_lower);
  EXPECT_TRUE(*twelve.tau6_upper);
  EXPECT_TRUE(twelve.k_identity);
  EXPECT_FALSE(twelve.tau4_upper.has_value());
  EXPECT_THROW(check_sigma_bounds(16), InapplicableError);
}

TEST(SigmaBounds, ScanSurfacesTheTauFourDiscrepancy) {
  const auto r = run_check(CheckId::sigma_bounds, 2, 100000);
  EXPECT_EQ(r.status, CheckStatus::verified);
  ASSERT_EQ(r.discrepancies.size(), 1u);
  EXPECT_EQ(r.discrepancies.front().n, 6u);
  EXPECT_EQ(r.tallies.at("tau4_upper_clause_failures"), 1u);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Multiplier, Examples) {
  EXPECT_TRUE(check_multiplier(6, 7, 1));
  EXPECT_EQ(k_ratio(42), Rational(2));
  EXPECT_TRUE(check_multiplier(12, 13, 2));
  EXPECT_EQ(k_ratio(2028), Rational::of(9, 5));
  EXPECT_THROW(check_multiplier(1, 2, 3), InapplicableError);
  EXPECT_THROW(check_multiplier(9, 11, 1), InapplicableError);
  EXPECT_THROW(check_multiplier(6, 5, 1), DomainError);
  EXPECT_THROW(check_multiplier(6, 9, 1), DomainError);
  EXPECT_THROW(check_multiplier(6, 7, 0), DomainError);
}

TEST(Multiplier, RandomSamples) {
  int tested = 0;
  while (tested < 500) {
    const auto n = oracle::uniform(2, 1000);
    if (is_perfect_square(n)) continue;
    const auto p = next_prime(n);
    const auto a = static_cast<std::uint32_t>(oracle::uniform(1, 3));
    ASSERT_TRUE(check_multiplier(n, p, a)) << n << " " << p << " " << a;
    const auto [num, den] = oracle::k_pair(n);
    std::uint64_t m = n;
    for (std::uint32_t i = 0; i < a; ++i) m *= p;
    if (m <= 2000000) {
      ASSERT_EQ(oracle::k_pair(m), std::make_pair(num, den)) << m;
    }
    ++tested;
  }
}

TEST(MultiplierChain, Examples) {
  EXPECT_TRUE(check_multiplier_chain(3, Factorization::from_factors({{5, 2}, {101, 1}})));
  EXPECT_EQ(k_ratio(3 * 25 * 101), Rational(3));
  EXPECT_TRUE(check_multiplier_chain(2, factorize(3)));
  try {
    check_multiplier_chain(6, factorize(5));
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    check_multiplier_chain(3, Factorization::from_factors({{5, 2}, {53, 1}}));
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(Pairing, Examples) {
  EXPECT_TRUE(check_pairing(15));
  EXPECT_TRUE(check_pairing(2));
  EXPECT_THROW(check_pairing(30), InapplicableError);
  EXPECT_THROW(check_pairing(90), InapplicableError);
}

TEST(Pairing, BreaksAt2431) {
  // 2431 = 11 * 13 * 17 has k = 7 and tau = 8, yet its divisors do not pair by 7.
  EXPECT_EQ(k_ratio(2431), Rational(7));
  EXPECT_EQ(profile(2431).tau, 8u);
  EXPECT_FALSE(check_pairing(2431));
}

TEST(Pairing, OracleAgreesUpTo10k) {
  // Independent check of the pairing and of sigma_{e,alpha} = p^alpha sigma_{o,alpha}.
  std::vector<std::uint64_t> failures;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto ds = oracle::divisors(n);
    const auto [num, den] = oracle::k_pair(n);
    if (den != 1 || !oracle::is_prime(num) || ds.size() > 8) continue;
    const auto p = static_cast<std::uint64_t>(num);
    bool ok = ds.size() % 2 == 0;
    for (std::size_t j = 0; ok && j < ds.size(); j += 2) ok = ds[j + 1] == p * ds[j];
    for (int alpha : {-2, -1, 0, 1, 2, 3}) {
      const auto [even, odd] = oracle::parity_sums(n, alpha);
      ok = ok && even == oracle::power(p, alpha) * odd;
    }
    ASSERT_EQ(check_pairing(n), ok) << n;
    if (!ok) failures.push_back(n);
  }
  EXPECT_EQ(failures, (std::vector<std::uint64_t>{2431}));
  const auto r = run_check(CheckId::pairing, 2, 10000);
  EXPECT_EQ(violation_ns(r), failures);
  EXPECT_EQ(r.status, CheckStatus::violated);
}

TEST(ExtendWithPrime, Examples) {
  EXPECT_THROW(extend_with_prime(45, 47), DomainError);
  EXPECT_EQ(k_ratio(63), Rational::of(75, 29));
  EXPECT_THROW(extend_with_prime(63, 67), DomainError);
  EXPECT_EQ(k_ratio(75), Rational(3));
  EXPECT_EQ(extend_with_prime(75, 79), 5925u);
  const auto list = divisors_sorted(factorize(5925));
  EXPECT_EQ(std::vector<std::uint64_t>(list.divisors().begin(), list.divisors().end()),
            (std::vector<std::uint64_t>{1, 3, 5, 15, 25, 75, 79, 237, 395, 1185, 1975, 5925}));
  EXPECT_TRUE(divisors_pair_by(list, 3));
  EXPECT_THROW(extend_with_prime(75, 73), DomainError);
  EXPECT_THROW(extend_with_prime(75, 81), DomainError);
  EXPECT_THROW(extend_with_prime(15, 17), DomainError);
}

TEST(PrimePowerDistinct, Examples) {
  const auto r = check_prime_power_distinct(100);
  EXPECT_EQ(r.applicable, 7u);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_NE(k_ratio(4), k_ratio(9));
  const auto single = check_prime_power_distinct(4);
  EXPECT_EQ(single.applicable, 1u);
  EXPECT_EQ(single.status, CheckStatus::verified);
  EXPECT_THROW(check_prime_power_distinct(3), DomainError);
}

TEST(PrimePowerDistinct, OneMillion) {
  const auto r = check_prime_power_distinct(1000000);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_EQ(r.applicable, 193u);
}

TEST(UnitFraction, Examples) {
  EXPECT_TRUE(check_unit_fraction_gap(3, 2));
  EXPECT_TRUE(check_unit_fraction_gap(2, 2));
  EXPECT_TRUE(check_unit_fraction_gap(2, 4));
  EXPECT_EQ(k_ratio(16), Rational::of(10, 21));
  EXPECT_THROW(check_unit_fraction_gap(2, 3), DomainError);
  EXPECT_THROW(check_unit_fraction_gap(4, 2), DomainError);
  const auto r = run_check(CheckId::unit_fraction, 4, 1000000);
  EXPECT_EQ(r.status, CheckStatus::verified);
  EXPECT_EQ(r.applicable, 193u);
}

TEST(Conjecture1, CounterexamplesBelow10k) {
  const auto r = scan_conjecture1(10000);
  EXPECT_EQ(r.status, CheckStatus::violated);
  EXPECT_EQ(violation_ns(r), (std::vector<std::uint64_t>{2431, 8569}));
  EXPECT_NE(r.evidence().find("counterexample"), std::string::npos);
  EXPECT_EQ(k_ratio(15), Rational(3));
  EXPECT_EQ(scan_conjecture1(2).status, CheckStatus::verified);
}

TEST(Conjecture2, CounterexamplesBelow10k) {
  const auto r = scan_conjecture2(10000);
  EXPECT_EQ(r.status, CheckStatus::violated);
  for (auto n : violation_ns(r)) {
    const auto ds = oracle::divisors(n);
    const auto [p, den] = oracle::k_pair(n);
    ASSERT_EQ(den, 1);
    bool pairs = true;
    for (std::size_t j = 0; j < ds.size(); j += 2) pairs = pairs && ds[j + 1] == static_cast<std::uint64_t>(p) * ds[j];
    EXPECT_FALSE(pairs) << n;
  }
  const auto ns = violation_ns(r);
  EXPECT_NE(std::find(ns.begin(), ns.end(), 2431u), ns.end());
  // 90 has k = 151/83, so it lies outside the scan's domain and does not pair.
  EXPECT_EQ(k_ratio(90), Rational::of(151, 83));
  EXPECT_FALSE(divisors_pair_by(divisors_sorted(factorize(90)), 2));
  EXPECT_TRUE(divisors_pair_by(divisors_sorted(factorize(8)), 2));
}

TEST(Conjecture3, CollisionsAmongSquares) {
  EXPECT_EQ(k_ratio(1225), k_ratio(3025));
  EXPECT_EQ(k_ratio(1225), Rational::of(108, 481));
  const auto r = scan_conjecture3(100000);
  EXPECT_EQ(r.status, CheckStatus::violated);
  EXPECT_EQ(violation_ns(r), (std::vector<std::uint64_t>{3025, 75625}));
  EXPECT_EQ(r.applicable, 316u);
  ASSERT_FALSE(r.notes.empty());
  const auto tiny = scan_conjecture3(3);
  EXPECT_EQ(tiny.status, CheckStatus::verified);
  EXPECT_EQ(tiny.applicable, 1u);
}

TEST(Restartability, SplitScansMatchUnsplitScans) {
  for (auto id : {CheckId::conjecture1, CheckId::conjecture2, CheckId::conjecture3, CheckId::pairing,
                  CheckId::prime_power_distinct, CheckId::lower_bound, CheckId::sigma_bounds}) {
    const std::uint64_t lo = default_lower(id), hi = 100000;
    const auto whole = run_check(id, lo, hi);
    for (std::uint64_t cut : {lo, std::uint64_t{2431}, std::uint64_t{3025}, std::uint64_t{50000}, hi - 1}) {
      auto merged = merge_reports(run_check(id, lo, cut), run_check(id, cut + 1, hi));
      ASSERT_EQ(merged.violations, whole.violations) << check_name(id) << " cut " << cut;
      ASSERT_EQ(merged.status, whole.status);
      ASSERT_EQ(merged.applicable, whole.applicable);
    }
  }
}

TEST(Restartability, WorkerCountDoesNotChangeReports) {
  ScanOptions many;
  many.workers = 8;
  many.chunk_size = 3001;
  const auto a = scan_conjecture1(100000);
  const auto b = scan_conjecture1(100000, many);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.applicable, b.applicable);
}

TEST(Recheck, EveryViolationReverifiesAlone) {
  for (auto id : {CheckId::conjecture1, CheckId::conjecture2, CheckId::conjecture3, CheckId::pairing}) {
    const auto r = run_check(id, default_lower(id), 100000);
    ASSERT_FALSE(r.violations.empty());
    for (const auto& v : r.violations) ASSERT_TRUE(recheck(id, v)) << check_name(id) << " " << v.n;
  }
  EXPECT_FALSE(recheck(CheckId::conjecture1, {15, "", ""}));
}

TEST(CheckIds, RoundTrip) {
  for (auto id : {CheckId::upper_bound, CheckId::lower_bound, CheckId::sigma_bounds, CheckId::multiplier,
                  CheckId::pairing, CheckId::prime_power_distinct, CheckId::unit_fraction, CheckId::conjecture1,
                  CheckId::conjecture2, CheckId::conjecture3})
    EXPECT_EQ(parse_check(check_name(id)), id);
  EXPECT_FALSE(parse_check("nope").has_value());
}

TEST(ScanReport, MergeRejectsMismatches) {
  const auto a = run_check(CheckId::upper_bound, 2, 100);
  EXPECT_THROW(merge_reports(a, run_check(CheckId::upper_bound, 100, 200)), RangeError);
  EXPECT_THROW(merge_reports(a, run_check(CheckId::upper_bound, 102, 200)), RangeError);
  EXPECT_THROW(merge_reports(a, run_check(CheckId::pairing, 101, 200)), Error);
  const auto empty = run_check(CheckId::lower_bound, 5, 8);
  EXPECT_EQ(empty.status, CheckStatus::inapplicable);
  EXPECT_NE(empty.evidence().find("no applicable"), std::string::npos);
}

}  // namespace
}  // namespace irn
