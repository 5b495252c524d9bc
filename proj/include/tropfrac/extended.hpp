#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace tropfrac {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact parse of "12", "-3/4", "2.5", "-0.125". Throws std::invalid_argument.
Rational parse_rational(std::string_view s);
// Lowest terms, "p/q" or "p".
std::string to_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
// Rational with the smallest denominator in the open interval (lo, hi), lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

enum class Semiring : std::uint8_t { max_plus, min_plus };

// Element of R u {-inf, +inf}.
class ExtendedNumber {
 public:
  enum class Kind : std::uint8_t { finite, neg_inf, pos_inf };

  ExtendedNumber() : kind_(Kind::neg_inf) {}
  ExtendedNumber(long v) : kind_(Kind::finite), value_(v) {}
  ExtendedNumber(int v) : kind_(Kind::finite), value_(v) {}
  ExtendedNumber(const Rational& v) : kind_(Kind::finite), value_(v) { value_.canonicalize(); }

  static ExtendedNumber neg_inf() { return ExtendedNumber(); }
  static ExtendedNumber pos_inf() {
    ExtendedNumber x;
    x.kind_ = Kind::pos_inf;
    return x;
  }
  // Zero of the semiring: -inf for max-plus, +inf for min-plus.
  static ExtendedNumber bottom(Semiring s) { return s == Semiring::max_plus ? neg_inf() : pos_inf(); }

  // Accepts the forms of parse_rational plus "-inf", "+inf", "inf".
  static ExtendedNumber parse(std::string_view s);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  // Throws std::logic_error when infinite.
  const Rational& value() const;

  std::string str() const;

  ExtendedNumber operator-() const;

  friend bool operator==(const ExtendedNumber& a, const ExtendedNumber& b);
  friend std::strong_ordering operator<=>(const ExtendedNumber& a, const ExtendedNumber& b);

 private:
  Kind kind_;
  Rational value_;
};

// a + b; (-inf)+(+inf) is -inf under max_plus and +inf under min_plus.
ExtendedNumber plus(Semiring s, const ExtendedNumber& a, const ExtendedNumber& b);
// max under max_plus, min under min_plus.
ExtendedNumber join(Semiring s, const ExtendedNumber& a, const ExtendedNumber& b);

inline const ExtendedNumber& max_of(const ExtendedNumber& a, const ExtendedNumber& b) { return a < b ? b : a; }
inline const ExtendedNumber& min_of(const ExtendedNumber& a, const ExtendedNumber& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtendedNumber& x);

}  // namespace tropfrac
