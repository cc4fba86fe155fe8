#include "irn/factorization.hpp"

#include <algorithm>
#include <new>
#include <string>

#include "irn/checked.hpp"
#include "irn/errors.hpp"

namespace irn {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<wide_uint>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.exponent == 0) throw DomainError("zero exponent in factorization");
    if (i > 0 && factors[i - 1].prime >= f.prime) throw DomainError("primes must be strictly increasing");
    if (!irn::is_prime(f.prime)) throw DomainError(std::to_string(f.prime) + " is not prime");
    n = checked_mul_u64(n, checked_pow_u64(f.prime, f.exponent));
  }
  return Factorization(n, std::move(factors));
}

std::uint64_t Factorization::divisor_count() const noexcept {
  std::uint64_t tau = 1;
  for (const auto& f : factors_) tau *= f.exponent + 1;
  return tau;
}

bool Factorization::is_perfect_square() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent % 2 == 0; });
}

Factorization Factorization::times_prime_power(std::uint64_t p, std::uint32_t a) const {
  if (a == 0) return *this;
  if (!factors_.empty() && p <= factors_.back().prime)
    throw DomainError("appended prime must exceed every existing prime factor");
  if (!irn::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::uint64_t n = checked_mul_u64(n_, checked_pow_u64(p, a));
  auto factors = factors_;
  factors.push_back({p, a});
  return Factorization(n, std::move(factors));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  std::vector<PrimePower> factors;
  std::uint64_t m = n;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= m / p; p += 2) strip(p);
  if (m > 1) factors.push_back({m, 1});
  return Factorization(n, std::move(factors));
}

SieveTable::SieveTable(std::uint64_t limit, std::size_t memory_ceiling) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit >= (std::uint64_t{1} << 32) ||
      (limit + 1) > memory_ceiling / sizeof(std::uint32_t)) {
    throw SieveAllocationError("sieve limit " + std::to_string(limit) + " exceeds the memory ceiling of " +
                               std::to_string(memory_ceiling) + " bytes");
  }
  try {
    spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw SieveAllocationError("allocation failed for sieve limit " + std::to_string(limit));
  }
  // Linear sieve: each composite is written exactly once, by its smallest prime.
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint64_t SieveTable::smallest_prime_factor(std::uint64_t m) const {
  if (m < 2 || m > limit()) throw DomainError("query " + std::to_string(m) + " outside sieve range");
  return spf_[m];
}

Factorization SieveTable::factorize(std::uint64_t m) const {
  if (m == 0 || m > limit()) throw DomainError("query " + std::to_string(m) + " outside sieve range");
  std::vector<PrimePower> factors;
  std::uint64_t rest = m;
  while (rest > 1) {
    std::uint64_t p = spf_[rest];
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return Factorization(m, std::move(factors));
}

std::vector<std::uint64_t> SieveTable::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < spf_.size(); ++i)
    if (spf_[i] == i) out.push_back(i);
  return out;
}

RangeFactorizer::RangeFactorizer(std::uint64_t hi, const SieveTable* sieve) : hi_(hi), sieve_(sieve) {
  if (sieve_ != nullptr && sieve_->covers(hi)) return;
  sieve_ = nullptr;
  std::uint64_t root = isqrt(hi);
  if (root >= 2) base_primes_ = SieveTable(root).primes();
}

std::vector<Factorization> RangeFactorizer::block(std::uint64_t lo, std::uint64_t hi_block) const {
  if (lo == 0 || lo > hi_block || hi_block > hi_) throw DomainError("block outside factorizer range");
  const std::size_t len = hi_block - lo + 1;
  std::vector<Factorization> out;
  out.reserve(len);
  if (sieve_ != nullptr) {
    for (std::uint64_t m = lo; m <= hi_block; ++m) out.push_back(sieve_->factorize(m));
    return out;
  }
  std::vector<std::uint64_t> rest(len);
  std::vector<std::vector<PrimePower>> factors(len);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  for (std::uint64_t p : base_primes_) {
    if (p > hi_block / p) break;
    std::uint64_t first = (lo + p - 1) / p * p;
    for (std::uint64_t m = first; m <= hi_block; m += p) {
      std::size_t i = m - lo;
      std::uint32_t e = 0;
      while (rest[i] % p == 0) {
        rest[i] /= p;
        ++e;
      }
      factors[i].push_back({p, e});
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) factors[i].push_back({rest[i], 1});
    out.push_back(Factorization(lo + i, std::move(factors[i])));
  }
  return out;
}

}  // namespace irn
