#include <gtest/gtest.h>

#include "quanthelly/error.hpp"
#include "quanthelly/random.hpp"
#include "quanthelly/scalar.hpp"

using namespace quanthelly;

TEST(Scalar, ParseAndFormatRoundTrip) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(format_scalar(parse_scalar("-6/4")), "-3/2");
  EXPECT_EQ(format_scalar(parse_scalar("12")), "12");
  EXPECT_THROW(parse_scalar("1/0"), InvalidArgument);
  EXPECT_THROW(parse_scalar("abc"), InvalidArgument);
  EXPECT_THROW(parse_scalar(""), InvalidArgument);
}

TEST(Scalar, FloorCeil) {
  EXPECT_EQ(floor_of(Scalar(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Scalar(-7, 2)), -3);
  EXPECT_EQ(floor_of(Scalar(4)), 4);
  EXPECT_EQ(ceil_of(Scalar(4)), 4);
}

TEST(Scalar, DecimalRendering) {
  EXPECT_EQ(format_decimal(Scalar(1, 4)), "0.25");
  EXPECT_EQ(format_decimal(Scalar(1, 3), 4), "0.3333");
}

TEST(Scalar, SqrtBoundsBracketAndTighten) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Scalar v = rng.grid(0, 50, 7);
    const auto b = sqrt_bounds(v, 30);
    EXPECT_LE(b.lo * b.lo, v);
    EXPECT_GE(b.hi * b.hi, v);
    EXPECT_LE(b.hi - b.lo, pow2(-30));
  }
  const auto exact = sqrt_bounds(Scalar(9, 4), 10);
  EXPECT_EQ(exact.lo, Scalar(3, 2));
  EXPECT_EQ(exact.hi, Scalar(3, 2));
}

TEST(Scalar, ExactSqrt) {
  Scalar r;
  EXPECT_TRUE(exact_sqrt(Scalar(49, 36), r));
  EXPECT_EQ(r, Scalar(7, 6));
  EXPECT_FALSE(exact_sqrt(Scalar(2), r));
  EXPECT_FALSE(exact_sqrt(Scalar(-4), r));
}

TEST(Scalar, BinomialMatchesPascal) {
  for (unsigned n = 0; n < 20; ++n) {
    for (unsigned k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  EXPECT_EQ(binomial(12, 6), 924);
}

TEST(Scalar, PrimitiveIntegerVector) {
  const auto v = primitive_integer_vector({Scalar(2, 3), Scalar(-4, 9)});
  EXPECT_EQ(v[0], 3);
  EXPECT_EQ(v[1], -2);
  const auto z = primitive_integer_vector({Scalar(0), Scalar(0)});
  EXPECT_EQ(z[0], 0);
}

TEST(Rng, Reproducible) {
  Rng a(7, 3), b(7, 3), c(7, 4);
  bool differ = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differ = differ || x != c.next();
  }
  EXPECT_TRUE(differ);
}

TEST(Rng, GridStaysInRange) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Scalar g = rng.grid(-2, 3, 5);
    EXPECT_GE(g, -2);
    EXPECT_LE(g, 3);
    EXPECT_TRUE(is_integral(Scalar(g * 5)));
  }
}
