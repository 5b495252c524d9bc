#include <doctest.h>

#include "brute.hpp"
#include "tropfrac/extended.hpp"

using namespace tropfrac;

TEST_CASE("rationals parse exactly and print in lowest terms") {
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("007/014") == Rational(1, 2));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-6/3")) == "-2");
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "--1", "0x10", "inf"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("floor, ceil and simplest rational") {
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(6)) == 6);
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(simplest_between(Rational(3, 2), Rational(7, 2)) == 2);
}

TEST_CASE("extended numbers keep lowest terms and a total order") {
  ExtendedNumber x(Rational(4, -6));
  CHECK(x.value().get_num() == -2);
  CHECK(x.value().get_den() == 3);
  CHECK(ExtendedNumber::neg_inf() < ExtendedNumber(-1000000));
  CHECK(ExtendedNumber(1000000) < ExtendedNumber::pos_inf());
  CHECK(ExtendedNumber::neg_inf() == ExtendedNumber::bottom(Semiring::max_plus));
  CHECK(ExtendedNumber::pos_inf() == ExtendedNumber::bottom(Semiring::min_plus));
  CHECK(-ExtendedNumber::neg_inf() == ExtendedNumber::pos_inf());
  CHECK_THROWS_AS(ExtendedNumber::neg_inf().value(), std::logic_error);
  CHECK(ExtendedNumber::parse("-inf").is_neg_inf());
  CHECK(ExtendedNumber::parse("+inf").is_pos_inf());
  CHECK(ExtendedNumber::parse("-3/6") == ExtendedNumber(Rational(-1, 2)));
  CHECK(ExtendedNumber(Rational(7, 3)).str() == "7/3");
}

TEST_CASE("opposite infinities follow the semiring") {
  const auto lo = ExtendedNumber::neg_inf(), hi = ExtendedNumber::pos_inf();
  CHECK(plus(Semiring::max_plus, lo, hi).is_neg_inf());
  CHECK(plus(Semiring::min_plus, lo, hi).is_pos_inf());
  CHECK(plus(Semiring::max_plus, ExtendedNumber(2), ExtendedNumber(Rational(1, 2))) == ExtendedNumber(Rational(5, 2)));
  CHECK(join(Semiring::max_plus, ExtendedNumber(2), lo) == ExtendedNumber(2));
  CHECK(join(Semiring::min_plus, ExtendedNumber(2), hi) == ExtendedNumber(2));
}

TEST_CASE("order agrees with the rationals on random samples") {
  brute::Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    Rational a = brute::frac(rng.integer(-50, 50), rng.integer(1, 9)), b = brute::frac(rng.integer(-50, 50), rng.integer(1, 9));
    CHECK((ExtendedNumber(a) < ExtendedNumber(b)) == (a < b));
    CHECK((ExtendedNumber(a) == ExtendedNumber(b)) == (a == b));
    CHECK(plus(Semiring::min_plus, a, b) == ExtendedNumber(Rational(a + b)));
  }
}
