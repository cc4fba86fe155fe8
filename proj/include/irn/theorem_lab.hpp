#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "irn/classifier.hpp"
#include "irn/divisors.hpp"
#include "irn/factorization.hpp"
#include "irn/rational.hpp"
#include "irn/scan_report.hpp"

namespace irn {

// ---- single-n checks --------------------------------------------------------
// Inputs outside a statement's hypotheses throw InapplicableError (wrong kind
// of n) or DomainError (malformed parameters).

/// k(n) < d_2 + 1/d_2 for non-square n >= 2.
bool check_upper_bound(std::uint64_t n);

/// p + (q - p^3) / (pq + p^2 + 1), evaluated as written.
Rational p2q_closed_form(std::uint64_t p, std::uint64_t q);

/// For each q (ascending primes, q > p^2): k(p^2 q) equals the closed form,
/// the values strictly increase, and all stay below p + 1/p.
bool check_upper_bound_optimality(std::uint64_t p, std::span<const std::uint64_t> qs);

struct LowerBoundResult {
  bool holds = false;        // k >= d_2 / (d_2^2 + 1)
  bool equality = false;     // k == d_2 / (d_2^2 + 1)
  bool prime_square = false; // n = p^2
  /// The bound holds and equality occurs exactly at prime squares.
  bool consistent() const noexcept { return holds && equality == prime_square; }
};

/// Perfect square n >= 4.
LowerBoundResult check_lower_bound(std::uint64_t n);

/// Per-clause outcomes for the elementary sigma_e / sigma_{e,-1} / k bounds
/// of a non-square n >= 2. Absent optionals mean "clause does not apply".
struct SigmaBoundsResult {
  bool sigma_e_lower = false;     // tau - 2 + n <= sigma_e
  bool sigma_e_upper = false;     // sigma_e <= (tau + 2) n / 4
  bool reciprocal_lower = false;  // 4n / ((tau - 2) n + 4) <= 1 / sigma_{e,-1}
  bool reciprocal_upper = false;  // 1 / sigma_{e,-1} <= n / (tau - 1)
  bool k_identity = false;        // k = sigma_e / (n sigma_{e,-1})
  bool k_lower = false;           // 4 (tau - 2 + n) / ((tau - 2) n + 4) <= k
  bool k_upper = false;           // k <= (n / 4) (tau + 2) / (tau - 1)
  std::optional<bool> prime_k_is_n;  // tau = 2
  std::optional<bool> tau4_lower;    // 2 <= k
  std::optional<bool> tau4_upper;    // k <= n / 4; fails at n = 6
  std::optional<bool> tau6_lower;    // (n + 4) / (n + 1) <= k
  std::optional<bool> tau6_upper;    // k <= 2n / 5

  /// Every asserted clause (all but tau4_upper) holds.
  bool asserted_hold() const noexcept;
};

SigmaBoundsResult check_sigma_bounds(std::uint64_t n);

/// k(n p^a) = k(n) for non-square n >= 2, prime p > n, a >= 1. Squares are
/// inapplicable (k(4) = 2/5 but k(20) = 9/5), as is n = 1 (k(1) = 0).
bool check_multiplier(std::uint64_t n, std::uint64_t p, std::uint32_t a);

/// k(nm) = k(n) via iterated check_multiplier. Throws HypothesisViolation
/// carrying the 1-based index i of the first prime that is too small.
bool check_multiplier_chain(std::uint64_t n, const Factorization& m);

/// d_{2j} = p d_{2j-1} for every j.
bool divisors_pair_by(const DivisorList& divisors, std::uint64_t p);

/// n with k(n) = p prime and tau(n) <= 8: the divisor pairing and
/// sigma_{e,alpha} = p^alpha sigma_{o,alpha} for alpha in -2..3.
bool check_pairing(std::uint64_t n);

/// Returns qn for a p-index ratio number n with tau(n) = 6 and a prime q > n,
/// after confirming qn pairs by p, has 12 divisors, and they interleave as
/// d1, d2, d3, d2d3, d5, d2d5, q, d2q, d3q, d2d3q, d5q, d2d5q. Throws
/// DomainError on bad preconditions and CheckFailure if the result does not.
std::uint64_t extend_with_prime(std::uint64_t n, std::uint64_t q);

/// p/(p^2+1) <= k(p^l) < 1/p, 1/(p+1) < p/(p^2+1), k(p^l) equals
/// (p^{l+1} - p)/(p^{l+2} - 1), and k(p^l) is not a unit fraction. l even.
bool check_unit_fraction_gap(std::uint64_t p, unsigned l);

// ---- range scans ------------------------------------------------------------

enum class CheckId {
  upper_bound,
  lower_bound,
  sigma_bounds,
  multiplier,
  pairing,
  prime_power_distinct,
  unit_fraction,
  conjecture1,
  conjecture2,
  conjecture3,
};

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);
/// Smallest n the statement can apply to (2 for most, 4 for squares, 1 for
/// conjecture 3).
std::uint64_t default_lower(CheckId id);

/// Scans [lo, hi]. Violations are attributed to a single n, so splitting the
/// range anywhere and merging yields the same violation set.
ScanReport run_check(CheckId id, std::uint64_t lo, std::uint64_t hi, const ScanOptions& options = {});

/// All k(p^a), a even, p^a <= limit, pairwise distinct.
ScanReport check_prime_power_distinct(std::uint64_t limit, const ScanOptions& options = {});
/// Integral k implies k = d_2 (plus the even-n and odd-3|n corollaries).
ScanReport scan_conjecture1(std::uint64_t limit, const ScanOptions& options = {});
/// k = p prime implies d_{2j} = p d_{2j-1}, with no bound on tau.
ScanReport scan_conjecture2(std::uint64_t limit, const ScanOptions& options = {});
/// Classes with k < 1 are singletons.
ScanReport scan_conjecture3(std::uint64_t limit, const ScanOptions& options = {});

/// Re-evaluates a reported violation from its n alone; true if it reproduces.
bool recheck(CheckId id, const Violation& violation);

}  // namespace irn
