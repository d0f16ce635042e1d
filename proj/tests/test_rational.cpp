#include "doctest.h"

#include <string>
#include <vector>

#include "arrinv/generator.hpp"
#include "arrinv/rational.hpp"

using arrinv::BigInt;
using arrinv::Rational;
using arrinv::SplitMix64;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-2), BigInt(-4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(-6)).to_string() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(7)).to_string() == "0");
  CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == 1);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
  Rational half(BigInt(1), BigInt(2));
  Rational third(BigInt(1), BigInt(3));
  CHECK((half + third).to_string() == "5/6");
  CHECK((half - third).to_string() == "1/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half / third).to_string() == "3/2");
  CHECK_THROWS_AS(half / Rational(0), std::invalid_argument);

  // (a/b)+(c/d) reduces to lowest terms
  Rational r = Rational(BigInt(1), BigInt(6)) + Rational(BigInt(1), BigInt(3));
  CHECK(r.numerator() == 1);
  CHECK(r.denominator() == 2);
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(-1), BigInt(3)));
  CHECK(Rational(7) > Rational(BigInt(13), BigInt(2)));
}

TEST_CASE("parse and print: p or p/q, sign on the numerator only") {
  CHECK(Rational::from_string("3/2").to_string() == "3/2");
  CHECK(Rational::from_string("-3/2").to_string() == "-3/2");
  CHECK(Rational::from_string("7").to_string() == "7");
  CHECK(Rational::from_string("-0").to_string() == "0");
  CHECK(Rational::from_string("2/4").to_string() == "1/2");  // normalized on parse
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1 /2"), std::invalid_argument);
}

TEST_CASE("parse then print is the identity on canonical strings") {
  SplitMix64 rng(42);
  for (int i = 0; i < 500; ++i) {
    BigInt num = rng.int_in(-1000000, 1000000);
    BigInt den = 1 + static_cast<long long>(rng.below(1000000));
    std::string canonical = Rational(num, den).to_string();
    CHECK(Rational::from_string(canonical).to_string() == canonical);
  }
}

TEST_CASE("arithmetic survives values far beyond machine words") {
  BigInt big = arrinv::parse_bigint("123456789012345678901234567890123456789");
  Rational r(big, BigInt(7));
  Rational round_trip = (r * Rational(BigInt(49), BigInt(big))) / Rational(7);
  CHECK(round_trip == Rational(1));

  CHECK(arrinv::factorial(25).str() == "15511210043330985984000000");
  CHECK_THROWS_AS(arrinv::to_int64(big), std::overflow_error);
  CHECK(arrinv::fits_int64(BigInt(1) << 62));
  CHECK_FALSE(arrinv::fits_int64(BigInt(1) << 63));
  CHECK(arrinv::to_int64(-(BigInt(1) << 63)) == std::numeric_limits<std::int64_t>::min());
}

TEST_CASE("algebraic identities on random rationals") {
  SplitMix64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a(rng.int_in(-50, 50), 1 + static_cast<long long>(rng.below(20)));
    Rational b(rng.int_in(-50, 50), 1 + static_cast<long long>(rng.below(20)));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(arrinv::big_gcd(arrinv::big_abs(a.numerator()), a.denominator()) == 1);
  }
}
