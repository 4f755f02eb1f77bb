#include <gsc/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using gsc::Rational;

TEST(Rational, StoresReducedFormWithPositiveDenominator) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
}

TEST(Rational, FloorAndModHandleNegatives) {
    EXPECT_EQ(Rational(-1, 2).floor(), -1);
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-1, 4).frac(), Rational(3, 4));
    EXPECT_EQ(Rational(9, 4).mod(Rational(1)), Rational(1, 4));
    EXPECT_EQ(Rational(3, 2).wrap(Rational(-1), Rational(2)), Rational(-1, 2));
    EXPECT_EQ(Rational(-1).wrap(Rational(-1), Rational(2)), Rational(-1));
    EXPECT_EQ(Rational(1).wrap(Rational(-1), Rational(2)), Rational(-1));
}

TEST(Rational, ParseAcceptsIntegersAndFractionsOnly) {
    EXPECT_EQ(Rational::parse("-15/2"), Rational(-15, 2));
    EXPECT_EQ(Rational::parse("4"), Rational(4));
    EXPECT_EQ(Rational::parse(" 2/4 "), Rational(1, 2));
    EXPECT_THROW(Rational::parse("0.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, OverflowIsReportedNotWrapped) {
    Rational big(std::int64_t{1} << 62);
    EXPECT_THROW(big * big, gsc::rational_overflow);
    EXPECT_THROW(Rational(1, 3) + Rational(1, (std::int64_t{1} << 62) + 1) * Rational(1, 5), gsc::rational_overflow);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), std::domain_error); }

TEST(Rational, RandomFieldIdentities) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 500);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - b + b, a);
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        Rational f = a.frac();
        EXPECT_GE(f, Rational(0));
        EXPECT_LT(f, Rational(1));
        EXPECT_TRUE((a - f).is_integer());
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}
