#include "irn/divisors.hpp"

#include <algorithm>

namespace irn {

DivisorList divisors_sorted(const Factorization& f) {
  std::vector<std::uint64_t> divisors;
  divisors.reserve(f.divisor_count());
  divisors.push_back(1);
  for (const auto& [p, m] : f.factors()) {
    const std::size_t base = divisors.size();
    std::uint64_t power = 1;
    for (std::uint32_t e = 1; e <= m; ++e) {
      power *= p;  // p^e divides n, which fits in 64 bits
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return DivisorList(f.value(), std::move(divisors));
}

}  // namespace irn
