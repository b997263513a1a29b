#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpcompact/scalar.hpp"

using namespace lpcompact;

TEST_CASE("rational arithmetic is canonical") {
  const Rational half(1, 2);
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(-3, -6) == half);
  CHECK(Rational(3, -6) == -half);
  CHECK((Rational(1, 3) + Rational(1, 6)) == half);
  CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
  CHECK((Rational(1) / Rational(3)).to_string() == "1/3");
  CHECK(Rational(7).to_string() == "7");
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgumentError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgumentError);
}

TEST_CASE("rational ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), 0) == Rational(1));
  CHECK(pow(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("rational parse accepts fractions, integers and decimals") {
  CHECK(*Rational::parse("3/4") == Rational(3, 4));
  CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(*Rational::parse("12") == Rational(12));
  CHECK(*Rational::parse("0.25") == Rational(1, 4));
  CHECK(*Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(*Rational::parse(" 9/10 ") == Rational(9, 10));
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("a/b"));
  CHECK(!Rational::parse("1e3"));
}

TEST_CASE("decimal rendering is exact and rounds half away from zero") {
  CHECK(Rational(1, 2).to_decimal(3) == "0.500");
  CHECK(Rational(1, 3).to_decimal(6) == "0.333333");
  CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(Rational(0).to_decimal(2) == "0.00");
  CHECK(Rational(14).to_decimal(12) == "14.000000000000");
}

TEST_CASE("exact roots detect perfect powers") {
  CHECK(*exact_root(Rational(4, 9), 2) == Rational(2, 3));
  CHECK(*exact_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK(*exact_root(Rational(-8), 3) == Rational(-2));
  CHECK(!exact_root(Rational(2), 2));
  CHECK(!exact_root(Rational(-4), 2));
  CHECK(*exact_root(Rational(0), 5) == Rational(0));
  CHECK(*exact_root(Rational(1), 7) == Rational(1));
}

TEST_CASE("scalar propagates exactness through arithmetic") {
  const Scalar a = Scalar::from(Rational(1, 3));
  const Scalar b = Scalar::from(Rational(1, 6));
  CHECK((a + b).exact());
  CHECK((a + b).rat() == Rational(1, 2));
  const Scalar c = Scalar::approx(0.5);
  CHECK(!(a + c).exact());
  CHECK((a * b).rat() == Rational(1, 18));
  CHECK((-a).rat() == Rational(-1, 3));
  CHECK(Scalar::from(Rational(-2, 3)).abs().rat() == Rational(2, 3));
}

TEST_CASE("scalar comparisons are exact on the exact path") {
  // these two differ by less than any double can resolve
  const Rational tiny(1, 1'000'000);
  const Scalar x = Scalar::from(Rational(1) + tiny * tiny * tiny);
  const Scalar y = Scalar::from(Rational(1));
  CHECK(y < x);
  CHECK(!x.leq(y));
  CHECK(y.leq(x));
  CHECK(Scalar::approx(1.0).leq(Scalar::approx(1.0 + 1e-13), 1e-12));
}

TEST_CASE("scalar powers and roots") {
  const Exponent p3{3};
  CHECK(Scalar::from(Rational(2)).pow(p3).rat() == Rational(8));
  CHECK(Scalar::from(Rational(4)).root(2).rat() == Rational(2));
  CHECK(!Scalar::from(Rational(2)).root(2).exact());
  CHECK(Scalar::from(Rational(2)).root(2).to_double() == doctest::Approx(std::sqrt(2.0)));
  const Exponent p32{Rational(3, 2)};
  CHECK(!p32.integral());
  CHECK(!Scalar::from(Rational(4)).pow(p32).exact());
  CHECK(Scalar::from(Rational(4)).pow(p32).to_double() == doctest::Approx(8.0));
}

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(Exponent(Rational(1, 2)), InvalidArgumentError);
  CHECK(Exponent(2).integral());
  CHECK(Exponent(2).as_long() == 2);
  CHECK(!Exponent(Rational(5, 2)).integral());
}
