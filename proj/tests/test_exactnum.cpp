#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddbar/exactnum.hpp"

using ddbar::DivisionByZero;
using ddbar::Rational;
using ddbar::Scalar;

namespace {
Scalar q(std::int64_t a, std::int64_t b = 1) { return Scalar(Rational(a, b)); }
Scalar c(Rational re, Rational im) { return Scalar(std::move(re), std::move(im)); }
}  // namespace

TEST_CASE("rational parse and canonical text") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-6/3").str() == "-2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational text round-trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    const Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("addition") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(Scalar::i() + (-Scalar::i()) == Scalar(0));
  CHECK(c(Rational(2, 3), Rational(1, 5)) + c(Rational(1, 3), Rational(4, 5)) == c(1, 1));
}

TEST_CASE("multiplication") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(c(1, 1) * c(1, -1) == Scalar(2));
  CHECK(q(1, 2) * c(0, 2) == Scalar::i());
  CHECK(mul(q(3), q(1, 3)) == Scalar(1));
}

TEST_CASE("inverse") {
  CHECK(inv(Scalar(2)) == q(1, 2));
  CHECK(inv(Scalar::i()) == -Scalar::i());
  CHECK(inv(c(1, 1)) == c(Rational(1, 2), Rational(-1, 2)));
  CHECK_THROWS_AS(inv(Scalar(0)), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(conj(c(1, 2)) == c(1, -2));
  CHECK(conj(q(3, 7)) == q(3, 7));
  CHECK(conj(conj(c(5, -1))) == c(5, -1));
}

TEST_CASE("scalar text") {
  CHECK(c(Rational(1, 2), Rational(-1, 2)).str() == "1/2-1/2i");
  CHECK(Scalar::i().str() == "i");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK(q(3, 2).str() == "3/2");
  CHECK(Scalar(0).str() == "0");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 9);
  auto any = [&] { return c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
  for (int i = 0; i < 100; ++i) {
    const Scalar a = any(), b = any(), d = any();
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a * b) * d == a * (b * d));
    CHECK(conj(a * b) == conj(a) * conj(b));
    if (!a.is_zero()) CHECK(a * inv(a) == Scalar(1));
  }
}
