#include "irn/checked.hpp"

#include <algorithm>
#include <cmath>

#include "irn/errors.hpp"

namespace irn {

wide_int checked_add(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

wide_int checked_sub(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

wide_int checked_mul(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

wide_int checked_pow(wide_int base, unsigned exponent) {
  wide_int result = 1;
  while (exponent > 0) {
    if (exponent & 1u) result = checked_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = checked_mul(base, base);
  }
  return result;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul_u64(result, base);
  return result;
}

wide_int gcd(wide_int a, wide_int b) {
  wide_uint x = a < 0 ? -static_cast<wide_uint>(a) : static_cast<wide_uint>(a);
  wide_uint y = b < 0 ? -static_cast<wide_uint>(b) : static_cast<wide_uint>(b);
  while (y != 0) {
    wide_uint t = x % y;
    x = y;
    y = t;
  }
  return static_cast<wide_int>(x);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<wide_uint>(r) * r > n) --r;
  while (static_cast<wide_uint>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n;
}

std::string to_string(wide_int value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  wide_uint magnitude = negative ? -static_cast<wide_uint>(value) : static_cast<wide_uint>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

wide_int parse_wide(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty integer");
  wide_int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return negative ? -value : value;
}

}  // namespace irn
