#include <doctest.h>

#include <random>
#include <sstream>

#include "cyclerep/scalar.hpp"

using cyclerep::GaussianRational;
using cyclerep::ParseError;
using cyclerep::Rational;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-2/6") == Rational(-1, 3));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2L));
  CHECK(a.inverse() == Rational(3L));
  CHECK_THROWS((void)Rational(0L).inverse());
  Rational acc(1L);
  acc.add_product(a, Rational(3L));
  CHECK(acc == Rational(2L));
  acc.sub_product(b, Rational(12L));
  CHECK(acc.is_zero());
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  auto draw = [&] {
    long q = d(rng);
    return Rational(d(rng), q == 0 ? 1 : q);
  };
  for (int n = 0; n < 500; ++n) {
    const Rational x = draw(), y = draw(), z = draw();
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("gaussian rational parse and print") {
  CHECK(GaussianRational::parse("i") == GaussianRational::imaginary_unit());
  CHECK(GaussianRational::parse("-i") == -GaussianRational::imaginary_unit());
  CHECK(GaussianRational::parse("1/2+3*i").str() == "1/2+3*i");
  CHECK(GaussianRational::parse("2-1/3*i").str() == "2-1/3*i");
  CHECK(GaussianRational::parse("5").str() == "5");
  CHECK(GaussianRational::parse("-4*i").str() == "-4*i");
  CHECK_THROWS_AS(GaussianRational::parse("2i"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1+"), ParseError);
}

TEST_CASE("gaussian rational arithmetic") {
  const auto i = GaussianRational::imaginary_unit();
  CHECK(i * i == GaussianRational(-1L));
  const GaussianRational z(Rational(3L), Rational(4L));
  CHECK(z * z.conj() == GaussianRational(25L));
  CHECK(z * z.inverse() == GaussianRational(1L));
  CHECK_THROWS((void)GaussianRational().inverse());

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int n = 0; n < 300; ++n) {
    const GaussianRational a(Rational(d(rng)), Rational(d(rng))), b(Rational(d(rng), 7), Rational(d(rng)));
    CHECK(GaussianRational::parse(a.str()) == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    GaussianRational acc = a;
    acc.add_product(a, b);
    CHECK(acc == a + a * b);
  }
}
