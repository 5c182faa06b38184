#include <doctest.h>

#include "lieop/random_sweep.hpp"
#include "lieop/rational.hpp"

using namespace lieop;

TEST_CASE("exact fraction arithmetic") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(1, 2) - Scalar(1, 3) == Scalar(1, 6));
  CHECK(Scalar(2, 3) * Scalar(3, 4) == Scalar(1, 2));
  CHECK(Scalar(3) / Scalar(2) == Scalar(3, 2));
}

TEST_CASE("canonical reduced form") {
  CHECK(Scalar(2, 4).str() == "1/2");
  CHECK(Scalar(-6, 8).str() == "-3/4");
  CHECK(Scalar(0, 7).str() == "0");
  CHECK(Scalar(7, 1).str() == "7");
  CHECK(Scalar(3, -6).str() == "-1/2");  // denominator sign normalized
}

TEST_CASE("division by zero is an input error") {
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), input_error);
  CHECK_THROWS_AS(Scalar(1, 0), input_error);
}

TEST_CASE("literal grammar") {
  CHECK(Scalar::parse("-3/4") == Scalar(-3, 4));
  CHECK(Scalar::parse("0") == Scalar(0));
  CHECK(Scalar::parse("7") == Scalar(7));
  CHECK(Scalar::parse("2/4").str() == "1/2");
  CHECK_THROWS_AS(Scalar::parse("1/0"), input_error);
  CHECK_THROWS_AS(Scalar::parse("1.5"), input_error);
  CHECK_THROWS_AS(Scalar::parse("+3"), input_error);
  CHECK_THROWS_AS(Scalar::parse("3/-4"), input_error);
  CHECK_THROWS_AS(Scalar::parse(""), input_error);
  CHECK_THROWS_AS(Scalar::parse(" 1"), input_error);
}

TEST_CASE("parse/print round trip") {
  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    Scalar s = rng.next_rational(1000, 997);
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("field laws on random samples") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    Scalar a = rng.next_rational(50, 20);
    Scalar b = rng.next_rational(50, 20);
    Scalar c = rng.next_rational(50, 20);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
