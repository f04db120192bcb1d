#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/qring.hpp"
#include "qh/strings.hpp"

using namespace qh;

TEST_CASE("canonical laurent strings") {
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly(7)) == "7");
  CHECK(to_string(LaurentPoly::u()) == "u");
  CHECK(to_string(LaurentPoly::u(-6)) == "u^-6");
  CHECK(to_string(LaurentPoly::u(6) + LaurentPoly::u(-6)) == "u^6 + u^-6");
  CHECK(to_string(LaurentPoly::u(2).scaled(Rational(-3, 2)) + LaurentPoly(1)) ==
        "-3/2*u^2 + 1");
  CHECK(to_string(LaurentPoly::u(1) - LaurentPoly(1)) == "u - 1");
}

TEST_CASE("canonical scalar strings") {
  RingConfig cfg;
  CHECK(to_string(Scalar(0)) == "(0)/(1)*h^0");
  CHECK(to_string(q_int(cfg, 2)) == "(u^6 + u^-6)/(1)*h^0");
  CHECK(to_string(eta(cfg)) == "(1)/(u^6 - 1)*h^1");
  Scalar mixed = Scalar(2) + Scalar::h(2, RatFun(Rational(-1, 3)));
  CHECK(to_string(mixed) == "(2)/(1)*h^0 + (-1/3)/(1)*h^2");
}

TEST_CASE("parse round trips") {
  RingConfig cfg;
  const Scalar cases[] = {
      Scalar(0),
      Scalar(Rational(-5, 3)),
      q_int(cfg, 4),
      eta(cfg),
      eta(cfg) * eta(cfg),
      q_pow(cfg, Rational(-7, 2)) + Scalar::h(3, RatFun(LaurentPoly::u(2), LaurentPoly::u(1) + LaurentPoly(2))),
      (q_pow(cfg, 2) - q_pow(cfg, Rational(-2))) * q_minus_one(cfg).inverse(),
  };
  for (const Scalar& s : cases) CHECK(parse_scalar(to_string(s)) == s);

  const LaurentPoly polys[] = {
      LaurentPoly(),
      LaurentPoly::u(12) - LaurentPoly(1),
      LaurentPoly::u(-3).scaled(Rational(7, 5)) + LaurentPoly::u(2) - LaurentPoly(4),
  };
  for (const LaurentPoly& p : polys) CHECK(parse_laurent(to_string(p)) == p);
}

TEST_CASE("h-polynomial strings reuse the scalar grammar") {
  HPoly p = HPoly(1) + HPoly::h(1, Rational(-2)) + HPoly::h(2, Rational(1, 4));
  CHECK(to_string(p) == "(1)/(1)*h^0 + (-2)/(1)*h^1 + (1/4)/(1)*h^2");
  CHECK(parse_scalar(to_string(p)) == Scalar::from_hpoly(p));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("u^"), ParseError);
  CHECK_THROWS_AS(parse_laurent("3*"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1)/(0)*h^0"), Error);
  CHECK_THROWS_AS(parse_scalar("(1)/(1)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1)/(1)*h^-1"), ParseError);
}
