#include <quadrica/integer.hpp>

#include <gtest/gtest.h>

using namespace quadrica;

TEST(Binom, KnownValues) {
  EXPECT_EQ(binom(17, 8), 24310);
  EXPECT_EQ(binom(221, 2), 24310);  // same triangular number
  EXPECT_EQ(binom(7, 3), 35);
  EXPECT_EQ(binom(9, 2), 36);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, 0), 1);
  EXPECT_EQ(binom(5, 5), 1);
}

TEST(Binom, OutOfRangeIsZero) {
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(5, 6), 0);
  EXPECT_EQ(binom(0, 1), 0);
}

TEST(Binom, NegativeNRejected) {
  EXPECT_THROW(binom(-1, 0), std::invalid_argument);
  EXPECT_THROW(binom(-7, 2), std::invalid_argument);
}

TEST(Binom, AgreesWithGmpOracle) {
  for (unsigned long n = 0; n <= 80; ++n)
    for (unsigned long k = 0; k <= n; ++k) {
      Integer expected;
      mpz_bin_uiui(expected.get_mpz_t(), n, k);
      EXPECT_EQ(binom(Integer(n), Integer(k)), expected) << n << " choose " << k;
    }
}

TEST(Binom, SymmetryExhaustive) {
  for (long n = 0; n <= 200; ++n)
    for (long k = 0; k <= n; ++k) ASSERT_EQ(binom(n, k), binom(n, n - k));
}

TEST(Binom, PascalExhaustive) {
  for (long n = 1; n <= 200; ++n)
    for (long k = 0; k <= n; ++k)
      ASSERT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST(IntegerSqrt, ExactnessFlag) {
  EXPECT_EQ(integer_sqrt(0).root, 0);
  EXPECT_TRUE(integer_sqrt(0).exact);
  EXPECT_EQ(integer_sqrt(194481).root, 441);  // 441^2
  EXPECT_TRUE(integer_sqrt(194481).exact);
  EXPECT_EQ(integer_sqrt(194482).root, 441);
  EXPECT_FALSE(integer_sqrt(194482).exact);
  EXPECT_THROW(integer_sqrt(-1), std::invalid_argument);
}

TEST(TriangularInverse, KnownValues) {
  EXPECT_EQ(triangular_inverse(24310).value(), 221);
  EXPECT_EQ(triangular_inverse(1).value(), 2);
  EXPECT_EQ(triangular_inverse(0).value(), 1);
  EXPECT_FALSE(triangular_inverse(2).has_value());
  EXPECT_FALSE(triangular_inverse(24310 + 1).has_value());
  EXPECT_THROW(triangular_inverse(-3), std::invalid_argument);
}

TEST(TriangularInverse, RoundTripsAllSmallDegrees) {
  for (long d = 1; d <= 100000; ++d) {
    const auto back = triangular_inverse(binom(d, 2));
    ASSERT_TRUE(back.has_value()) << d;
    ASSERT_EQ(*back, d);
  }
}

TEST(TriangularFloor, LargestAdmittedDegree) {
  EXPECT_EQ(triangular_floor(0), 1);
  EXPECT_EQ(triangular_floor(2), 2);   // C(2,2)=1 <= 2 < 3 = C(3,2)
  EXPECT_EQ(triangular_floor(3), 3);
  EXPECT_EQ(triangular_floor(35), 8);  // C(8,2)=28 <= 35 < 36
}

TEST(Vandermonde, SpotAndDegenerate) {
  EXPECT_TRUE(vandermonde_check(3, 2, 2));  // both sides 10
  EXPECT_TRUE(vandermonde_check(0, 5, 3));  // reduces to C(5,3) = C(5,3)
  EXPECT_TRUE(vandermonde_check(0, 2, 7));
  EXPECT_THROW(vandermonde_check(-1, 2, 2), std::invalid_argument);
}

TEST(Vandermonde, ExhaustiveSmall) {
  for (long m = 0; m <= 12; ++m)
    for (long a = 0; a <= 12; ++a)
      for (long b = 0; b <= 12; ++b) ASSERT_TRUE(vandermonde_check(m, a, b));
}

TEST(Parse, IntegerAndRational) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_THROW(parse_integer("4x"), std::invalid_argument);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
}
