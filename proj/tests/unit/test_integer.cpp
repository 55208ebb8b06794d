#include <gtest/gtest.h>

#include <random>

#include "qsing/error.hpp"
#include "qsing/integer.hpp"
#include "qsing/rational.hpp"

using qsing::Integer;
using qsing::Rational;

TEST(Integer, OverflowSpillsToGmpAndBack) {
  const Integer big = Integer(INT64_MAX) + Integer(1);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  const Integer back = big - Integer(1);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Integer(INT64_MAX));
  const Integer sq = Integer(INT64_MIN) * Integer(INT64_MIN);
  EXPECT_EQ(sq.to_string(), "85070591730234615865843651857942052864");
  EXPECT_EQ(-Integer(INT64_MIN), Integer::parse("9223372036854775808"));
}

TEST(Integer, MatchesGmpOnRandomArithmetic) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    const auto a = static_cast<std::int64_t>(rng());
    const auto b = static_cast<std::int64_t>(rng() >> (rng() % 63));
    const mpz_class za(static_cast<long>(a)), zb(static_cast<long>(b));
    EXPECT_EQ((Integer(a) + Integer(b)).to_mpz(), za + zb);
    EXPECT_EQ((Integer(a) - Integer(b)).to_mpz(), za - zb);
    EXPECT_EQ((Integer(a) * Integer(b)).to_mpz(), za * zb);
    if (b != 0) {
      EXPECT_EQ((Integer(a) / Integer(b)).to_mpz(), mpz_class(za / zb));
      EXPECT_EQ((Integer(a) % Integer(b)).to_mpz(), mpz_class(za % zb));
      const Integer q = qsing::floor_div(Integer(a), Integer(b));
      const Integer r = qsing::floor_mod(Integer(a), Integer(b));
      EXPECT_EQ(q * Integer(b) + r, Integer(a));
      EXPECT_TRUE(r.is_zero() || r.sign() == (b > 0 ? 1 : -1));
    }
  }
}

TEST(Integer, ExtendedGcd) {
  for (int a = -30; a <= 30; ++a) {
    for (int b = -30; b <= 30; ++b) {
      Integer s, t;
      const Integer g = qsing::extended_gcd(a, b, s, t);
      EXPECT_EQ(g, qsing::gcd(a, b));
      EXPECT_EQ(s * a + t * b, g);
      EXPECT_GE(g.sign(), 0);
    }
  }
}

TEST(Integer, ParseRejectsGarbage) {
  EXPECT_EQ(Integer::parse(" -42 "), Integer(-42));
  EXPECT_THROW(Integer::parse("4x"), qsing::InputError);
  EXPECT_THROW(Integer::parse("-"), qsing::InputError);
}

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), Integer(-3));
  EXPECT_EQ(r.den(), Integer(2));
  EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_THROW(Rational::parse("1/0"), qsing::InputError);
}

TEST(Rational, FieldAxiomsOnSamples) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int it = 0; it < 500; ++it) {
    const int d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0) continue;
    const Rational a(Integer(dist(rng)), Integer(d1));
    const Rational b(Integer(dist(rng)), Integer(d2));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a.frac() + Rational(a.floor()), a);
    EXPECT_GE(a.frac().sign(), 0);
    EXPECT_LT(a.frac(), Rational(1));
    EXPECT_EQ(a < b, static_cast<double>(a.num().to_int64()) / static_cast<double>(a.den().to_int64()) <
                         static_cast<double>(b.num().to_int64()) / static_cast<double>(b.den().to_int64()));
  }
}
