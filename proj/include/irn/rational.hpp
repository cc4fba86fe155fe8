#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "irn/checked.hpp"

namespace irn {

/// Exact non-negative fraction kept in lowest terms with a positive
/// denominator. Zero is 0/1, so structural equality is value equality.
class Rational {
 public:
  constexpr Rational() = default;
  /// Integer value n/1.
  explicit Rational(std::uint64_t integer) : num_(integer) {}

  /// Reduces num/den. Throws DomainError if den = 0 or either part is negative.
  static Rational of(wide_int num, wide_int den);

  /// Parses "num/den" or "num"; the result is canonicalised.
  static Rational parse(std::string_view text);

  wide_int num() const noexcept { return num_; }
  wide_int den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  /// Numerator 1 in canonical form.
  bool is_unit_fraction() const noexcept { return num_ == 1 && den_ > 1; }

  /// "num/den", or "num" when den = 1.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  /// Exact comparison that never overflows (continued-fraction descent).
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

 private:
  wide_int num_ = 0;
  wide_int den_ = 1;
};

}  // namespace irn
