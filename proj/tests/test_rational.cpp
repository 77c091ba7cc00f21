#include <doctest.h>

#include "ptspec/gaussian.hpp"
#include "ptspec/rational.hpp"

using namespace ptspec;

TEST_CASE("parse_rational handles integers, fractions and decimals exactly") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));  // canonicalized
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational(" 12 ") == Rational(12));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational rendering is decimal-free") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("gaussian rational field operations are exact") {
  GaussianRational a(Rational(1, 2), Rational(-1, 3));
  GaussianRational b(Rational(2, 5), Rational(7, 4));

  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * (b + b) == a * b + a * b);

  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == -i);
  CHECK_THROWS_AS(a / GaussianRational(0), std::invalid_argument);
}

TEST_CASE("gaussian rendering") {
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(to_string(GaussianRational(Rational(3, 4))) == "3/4");
  CHECK(to_string(GaussianRational::i()) == "i");
  CHECK(to_string(-GaussianRational::i()) == "-i");
  CHECK(to_string(GaussianRational(Rational(0), Rational(-1, 2))) == "-i/2");
  CHECK(to_string(GaussianRational(Rational(0), Rational(3, 4))) == "3i/4");
  CHECK(to_string(GaussianRational(Rational(1, 2), Rational(3))) == "1/2+3i");
  CHECK(to_string(GaussianRational(Rational(1), Rational(-2))) == "1-2i");
}
