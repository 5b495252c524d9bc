#include "tropfrac/extended.hpp"

#include <cctype>
#include <stdexcept>

namespace tropfrac {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto bad = [&] { return std::invalid_argument("not an exact rational: '" + std::string(text) + "'"); };
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    Integer d(std::string(den), 10);
    if (d == 0) throw bad();
    q = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw bad();
    Integer num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = Rational(num, den);
  } else {
    if (!all_digits(s)) throw bad();
    q = Rational(Integer(std::string(s), 10));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Smallest denominator in (lo, hi); hi absent means +inf.
Rational simplest_in(const Rational& lo, const Rational* hi) {
  Integer f = floor_of(lo);
  Integer next = f + 1;
  if (!hi || Rational(next) < *hi) {
    if (hi && lo < 0 && 0 < *hi) return Rational(0);
    if (hi && *hi <= 0) return Rational(Integer(ceil_of(*hi) - 1));
    return Rational(next);
  }
  Rational a = lo - f, b = *hi - f;  // 0 <= a < b <= 1
  Rational inv_b = 1 / b;
  Rational r;
  if (a == 0) {
    r = simplest_in(inv_b, nullptr);
  } else {
    Rational inv_a = 1 / a;
    r = simplest_in(inv_b, &inv_a);
  }
  return Rational(f) + 1 / r;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  Rational r = simplest_in(lo, &hi);
  r.canonicalize();
  return r;
}

ExtendedNumber ExtendedNumber::parse(std::string_view s) {
  if (s == "-inf") return neg_inf();
  if (s == "+inf" || s == "inf") return pos_inf();
  return ExtendedNumber(parse_rational(s));
}

const Rational& ExtendedNumber::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("value() of an infinite ExtendedNumber");
  return value_;
}

std::string ExtendedNumber::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    default: return to_string(value_);
  }
}

ExtendedNumber ExtendedNumber::operator-() const {
  if (kind_ == Kind::neg_inf) return pos_inf();
  if (kind_ == Kind::pos_inf) return neg_inf();
  return ExtendedNumber(Rational(-value_));
}

bool operator==(const ExtendedNumber& a, const ExtendedNumber& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedNumber::Kind::finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedNumber& a, const ExtendedNumber& b) {
  auto rank = [](ExtendedNumber::Kind k) {
    return k == ExtendedNumber::Kind::neg_inf ? 0 : k == ExtendedNumber::Kind::finite ? 1 : 2;
  };
  int ra = rank(a.kind_), rb = rank(b.kind_);
  if (ra != rb) return ra <=> rb;
  if (ra != 1) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtendedNumber plus(Semiring s, const ExtendedNumber& a, const ExtendedNumber& b) {
  if (a.is_finite() && b.is_finite()) return ExtendedNumber(Rational(a.value() + b.value()));
  bool has_neg = a.is_neg_inf() || b.is_neg_inf();
  bool has_pos = a.is_pos_inf() || b.is_pos_inf();
  if (has_neg && has_pos) return ExtendedNumber::bottom(s);
  return has_neg ? ExtendedNumber::neg_inf() : ExtendedNumber::pos_inf();
}

ExtendedNumber join(Semiring s, const ExtendedNumber& a, const ExtendedNumber& b) {
  return s == Semiring::max_plus ? max_of(a, b) : min_of(a, b);
}

std::ostream& operator<<(std::ostream& os, const ExtendedNumber& x) { return os << x.str(); }

}  // namespace tropfrac
