#include <gtest/gtest.h>

#include "orientcorr/dyadic.hpp"

using namespace orientcorr;

TEST(Dyadic, NormalizesOnConstruction) {
  const Dyadic x(BigInt(12), 5); // 12/32 = 3/8
  EXPECT_EQ(x.num(), 3);
  EXPECT_EQ(x.exp(), 3u);
  EXPECT_EQ(Dyadic(BigInt(0), 9).exp(), 0u);
  EXPECT_EQ(Dyadic(BigInt(-4), 1), Dyadic(-2));
  EXPECT_EQ(Dyadic(BigInt(6), 0).num(), 6);
}

TEST(Dyadic, Arithmetic) {
  const Dyadic a(21, 5), b(7, 4);
  EXPECT_EQ(b - a * a, Dyadic(7, 10)); // 7/16 - (21/32)^2 = 7/1024
  EXPECT_EQ(Dyadic(13, 5) - a * a, Dyadic(-25, 10));
  EXPECT_LT(Dyadic(1, 3), Dyadic(1, 2));
  EXPECT_EQ((Dyadic(1, 1) + Dyadic(1, 1)), Dyadic(1));
  EXPECT_EQ(Dyadic(3, 3).scaled_by_pow2(6), 24);
  EXPECT_THROW(Dyadic(3, 3).scaled_by_pow2(2), std::domain_error);
}

TEST(Dyadic, Strings) {
  EXPECT_EQ(Dyadic(BigInt(-1), 10).to_string(), "-1/2^10");
  EXPECT_EQ(Dyadic(0).to_string(), "0/2^0");
  EXPECT_EQ(DyadicProb::one().to_string(), "1/2^0");
  EXPECT_DOUBLE_EQ(Dyadic(21, 5).to_double(), 21.0 / 32.0);
}

TEST(Dyadic, DoubleOfHugeOperands) {
  const Dyadic tiny(BigInt(3) << 2000, 2003); // 3/8 after normalization
  EXPECT_DOUBLE_EQ(tiny.to_double(), 0.375);
  const Dyadic odd((BigInt(1) << 1500) + 1, 1502);
  EXPECT_NEAR(odd.to_double(), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(to_double(Rational(-7, 2)), -3.5);
}

TEST(DyadicProb, RejectsOutOfRange) {
  EXPECT_THROW(DyadicProb(BigInt(3), 1), std::domain_error);
  EXPECT_THROW(DyadicProb(Dyadic(-1)), std::domain_error);
  EXPECT_NO_THROW(DyadicProb(BigInt(2), 1));
}

TEST(SignedDyadic, SignMatchesMagnitude) {
  const auto neg = SignedDyadic::from(Dyadic(-25, 10));
  EXPECT_EQ(neg.sign, -1);
  EXPECT_EQ(neg.magnitude, DyadicProb(25, 10));
  EXPECT_EQ(neg.sign_char(), '-');
  const auto zero = SignedDyadic::from(Dyadic(0));
  EXPECT_EQ(zero.sign, 0);
  EXPECT_TRUE(zero.magnitude.is_zero());
}

TEST(FormatFixed, RoundsHalfToEven) {
  EXPECT_EQ(format_fixed(Rational(1, 8), 2), "0.12");  // 0.125 -> even
  EXPECT_EQ(format_fixed(Rational(3, 8), 2), "0.38");  // 0.375 -> even
  EXPECT_EQ(format_fixed(Rational(-1, 8), 3), "-0.125");
  EXPECT_EQ(format_fixed(Rational(0), 6), "0.000000");
  EXPECT_EQ(format_fixed(Rational(-1, 1000000000), 6), "0.000000");
  EXPECT_EQ(format_fixed(Rational(150, 1024), 4), "0.1465");
  EXPECT_EQ(format_fixed(Rational(7, 2), 0), "4");
  EXPECT_EQ(format_fixed(Rational(5, 2), 0), "2");
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(RationalString, Forms) {
  EXPECT_EQ(rational_to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(rational_to_string(Rational(4)), "4");
}
