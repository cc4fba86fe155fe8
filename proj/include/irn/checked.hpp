#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace irn {

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

// All helpers throw OverflowError instead of wrapping.
wide_int checked_add(wide_int a, wide_int b);
wide_int checked_sub(wide_int a, wide_int b);
wide_int checked_mul(wide_int a, wide_int b);
wide_int checked_pow(wide_int base, unsigned exponent);

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exponent);

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
wide_int gcd(wide_int a, wide_int b);

std::uint64_t isqrt(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

std::string to_string(wide_int value);
/// Decimal with optional leading '-'; throws ParseError or OverflowError.
wide_int parse_wide(std::string_view text);

}  // namespace irn
