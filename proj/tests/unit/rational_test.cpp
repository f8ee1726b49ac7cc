#include <gtest/gtest.h>

#include "cesaro/errors.hpp"
#include "cesaro/rational.hpp"

namespace cesaro {
namespace {

using rational::frac;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(rational::parse("3/10"), frac(3, 10));
  EXPECT_EQ(rational::parse("-6/4"), frac(-3, 2));
  EXPECT_EQ(rational::parse("7"), Rational(7));
  EXPECT_EQ(rational::parse("0.3"), frac(3, 10));
  EXPECT_EQ(rational::parse("-1.25e-2"), frac(-1, 80));
  EXPECT_EQ(rational::parse(" 1/2 "), frac(1, 2));
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(rational::parse(""), PreconditionError);
  EXPECT_THROW(rational::parse("1/0"), PreconditionError);
  EXPECT_THROW(rational::parse("abc"), PreconditionError);
  EXPECT_THROW(rational::parse("1/2/3"), PreconditionError);
  EXPECT_THROW(rational::parse("."), PreconditionError);
}

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(rational::to_string(frac(4, 8)), "1/2");
  EXPECT_EQ(rational::to_string(frac(-9, 3)), "-3");
  EXPECT_EQ(rational::to_string(Rational(0)), "0");
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(rational::to_decimal(frac(11, 18)), "0.611111111111111");
  EXPECT_EQ(rational::to_decimal(frac(1, 4)), "0.25");
  EXPECT_EQ(rational::to_decimal(Rational(0)), "0");
  EXPECT_EQ(rational::to_decimal(Rational(-3)), "-3");
}

TEST(Rational, FloorCeilAndPowers) {
  EXPECT_EQ(rational::floor(frac(-5, 2)), Integer(-3));
  EXPECT_EQ(rational::ceil(frac(-5, 2)), Integer(-2));
  EXPECT_EQ(rational::ceil(Rational(4)), Integer(4));
  EXPECT_EQ(rational::pow2(-3), frac(1, 8));
  EXPECT_EQ(rational::pow2(5), Rational(32));
  EXPECT_EQ(rational::pow(frac(2, 3), 3), frac(8, 27));
  EXPECT_EQ(rational::factorial(6), Integer(720));
  EXPECT_EQ(rational::factorial(0), Integer(1));
}

TEST(Rational, SmallestNaturalAbove) {
  EXPECT_EQ(rational::smallest_natural_above(Rational(4)), Integer(5));
  EXPECT_EQ(rational::smallest_natural_above(frac(7, 2)), Integer(4));
  EXPECT_EQ(rational::smallest_natural_above(Rational(-3)), Integer(1));
}

}  // namespace
}  // namespace cesaro
