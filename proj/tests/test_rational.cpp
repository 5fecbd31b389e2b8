#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kplane/rational.hpp"
#include "support/testutil.hpp"

using namespace kplane;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(10, 5).str() == "2");
}

TEST_CASE("parse accepts integers and fractions, rejects junk") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  // A sum that would drift under floating point stays exact.
  Rational s = 0;
  for (int i = 0; i < 300; ++i) s += Rational(1, 3);
  CHECK(s == Rational(100));
}

TEST_CASE("floor handles negatives") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("parse/str round-trips") {
  testutil::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = testutil::random_rational(rng, 5000, 997);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("simplest_between returns the smallest denominator in the interval") {
  CHECK(simplest_between(Rational(1, 5), Rational(2, 5)) == Rational(1, 3));
  CHECK(simplest_between(Rational(-1, 3), Rational(1, 7)) == Rational(0));
  CHECK(simplest_between(Rational(5, 2), Rational(7, 2)) == Rational(3));
  CHECK(simplest_between(Rational(7, 3), Rational(7, 3)) == Rational(7, 3));

  testutil::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    Rational a = testutil::random_rational(rng, 60, 17);
    Rational b = testutil::random_rational(rng, 60, 17);
    if (b < a) std::swap(a, b);
    const Rational s = simplest_between(a, b);
    CHECK(a <= s);
    CHECK(s <= b);
    // No rational with a smaller denominator fits in [a, b]: check by
    // enumerating all candidates with denominator below s's.
    for (mpz_class q = 1; q < s.den(); ++q) {
      const Rational qr{q};
      mpz_class lo = (a * qr).floor();
      for (mpz_class p = lo; Rational(p, q) <= b; ++p)
        CHECK(Rational(p, q) < a);
    }
  }
}
