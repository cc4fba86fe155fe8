#include "irn/rational.hpp"


#include "irn/errors.hpp"

namespace irn {

Rational Rational::of(wide_int num, wide_int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num < 0 || den < 0) throw DomainError("rational components must be non-negative");
  Rational r;
  if (num == 0) return r;
  wide_int g = gcd(num, den);
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return of(parse_wide(text), 1);
  return of(parse_wide(text.substr(0, slash)), parse_wide(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_ == 1) return irn::to_string(num_);
  return irn::to_string(num_) + "/" + irn::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Compare a_num/a_den with b_num/b_den by integer parts, then flip to the
  // reciprocals of the fractional parts.
  wide_int an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  bool flipped = false;
  while (true) {
    wide_int aq = an / ad, bq = bn / bd;
    if (aq != bq) {
      auto r = aq <=> bq;
      return flipped ? 0 <=> r : r;
    }
    wide_int ar = an % ad, br = bn % bd;
    if (ar == 0 || br == 0) {
      auto r = (ar == 0 && br == 0) ? std::strong_ordering::equal
               : ar == 0             ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      return flipped ? 0 <=> r : r;
    }
    // ar/ad vs br/bd  <=>  reversed(ad/ar vs bd/br)
    an = ad;
    ad = ar;
    bn = bd;
    bd = br;
    flipped = !flipped;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  wide_int g = gcd(a.den_, b.den_);
  wide_int num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
  wide_int den = checked_mul(a.den_, b.den_ / g);
  return Rational::of(num, den);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  wide_int g1 = gcd(a.num_, b.den_);
  wide_int g2 = gcd(b.num_, a.den_);
  return Rational::of(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero rational");
  return a * Rational::of(b.den_, b.num_);
}

}  // namespace irn
