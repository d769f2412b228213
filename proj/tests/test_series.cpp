#include <gtest/gtest.h>

#include "generators.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/series.hpp"

using namespace polycauchy;

namespace {

Rational R(long n, long d = 1) { return Rational::normalize(n, d); }

RationalSeries S(std::initializer_list<Rational> c) { return RationalSeries(std::vector<Rational>(c)); }

RationalSeries random_series(testgen::Gen& gen, std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.set(i, gen.rational(9));
  return s;
}

TEST(Series, MulDifferenceOfSquares) {
  EXPECT_EQ(S({1, 1, 0}) * S({1, -1, 0}), S({1, 0, -1}));
}

TEST(Series, MulGeometricInverse) {
  EXPECT_EQ(S({1, 1, 1, 1}) * S({1, -1, 0, 0}), RationalSeries::one(3));
}

TEST(Series, MulRejectsMismatchedOrders) {
  EXPECT_THROW((void)(S({1, 1}) * S({1, 1, 1})), TruncationError);
  EXPECT_THROW((void)(S({1, 1}) + S({1, 1, 1})), TruncationError);
}

TEST(Series, Invert) {
  EXPECT_EQ(invert(S({1, -1, 0, 0})), S({1, 1, 1, 1}));
  EXPECT_EQ(invert(S({1, 1, 0})), S({1, -1, 1}));
  // Derived: multiply back and check it is 1.
  const auto inv = invert(exp_series(2));
  EXPECT_EQ(inv, S({1, -1, R(1, 2)}));
  EXPECT_EQ(inv * exp_series(2), RationalSeries::one(2));
}

TEST(Series, InvertNonUnitThrows) {
  try {
    (void)invert(S({0, 1, 1}));
    FAIL();
  } catch (const NotInvertibleError& e) {
    EXPECT_STREQ(e.what(), "series not invertible");
  }
  PolySeries p(2);
  p.set(0, Polynomial::x());
  EXPECT_THROW((void)invert(p), NotInvertibleError);
}

TEST(Series, ComposeExpLog) {
  // exp(log(1+t)) = 1 + t exactly
  RationalSeries expected(6);
  expected.set(0, 1);
  expected.set(1, 1);
  EXPECT_EQ(compose(exp_series(6), log1p_series(6)), expected);
}

TEST(Series, ComposeWithZero) {
  const auto f = S({R(3), R(5), R(7)});
  EXPECT_EQ(compose(f, RationalSeries(2)), RationalSeries::constant(R(3), 2));
}

TEST(Series, ComposeLifZeroWithNegLog) {
  // Lif_0 = exp, so Lif_0(-log(1+t)) = 1/(1+t)
  EXPECT_EQ(compose(lif_series(0, 4), -log1p_series(4)), S({1, -1, 1, -1, 1}));
}

TEST(Series, ComposeRejectsNonDeltaInner) {
  EXPECT_THROW((void)compose(exp_series(3), exp_series(3)), std::domain_error);
}

TEST(Series, Log1p) {
  EXPECT_EQ(log1p_series(3), S({0, 1, R(-1, 2), R(1, 3)}));
  EXPECT_EQ(log1p_series(0), RationalSeries(0));
  EXPECT_EQ(log1p_series(5)[4], R(-1, 4));
}

TEST(Series, Exp) {
  EXPECT_EQ(exp_series(2), S({1, 1, R(1, 2)}));
  EXPECT_EQ(exp_series(0), RationalSeries::one(0));
  EXPECT_EQ(exp_series(5)[5], R(1, 120));
}

TEST(Series, PowInt) {
  EXPECT_EQ(pow_int(S({1, 1, 0}), 2), S({1, 2, 1}));
  EXPECT_EQ(pow_int(S({R(4), R(5), R(6)}), 0), RationalSeries::one(2));
  // (1 + t/2 - t^2/12)^2 = 1 + t + (1/4 - 1/6) t^2
  EXPECT_EQ(pow_int(t_over_log1p_series(2), 2)[2], R(1, 12));
  EXPECT_EQ(pow_int(S({1, 1, 0}), -1), S({1, -1, 1}));
  EXPECT_THROW((void)pow_int(S({0, 1, 0}), -1), NotInvertibleError);
}

TEST(Series, BinomialSeries) {
  const auto b = binomial_series(3);
  EXPECT_EQ(b[0], Polynomial(1));
  EXPECT_EQ(b[1], Polynomial::x());
  EXPECT_EQ(b[2], Polynomial({0, R(-1, 2), R(1, 2)}));
  EXPECT_EQ(b[3], falling_factorial_poly(3) * R(1, 6));
}

TEST(Series, ExtractSequence) {
  // Lif_1(-log(1+t)) (1+t)^x at n = 2 is x^2 - 2x + 5/6
  const PolySeries gf = lift(compose(lif_series(1, 2), -log1p_series(2))) * binomial_series(2);
  EXPECT_EQ(extract_sequence(gf, 2), Polynomial({R(5, 6), -2, 1}));
  EXPECT_EQ(extract_sequence(exp_series(4), 0), R(1));
  EXPECT_EQ(extract_sequence(t_over_log1p_series(2), 2), R(-1, 6));
}

TEST(Series, CoefficientBeyondOrderThrows) {
  try {
    (void)exp_series(3)[4];
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient truncation order"), std::string::npos);
  }
  EXPECT_THROW((void)extract_sequence(exp_series(3), 5), TruncationError);
}

TEST(Series, DivideByTAndEulerDerivative) {
  EXPECT_EQ(divide_by_t(log1p_series(3)), S({1, R(-1, 2), R(1, 3)}));
  EXPECT_THROW((void)divide_by_t(exp_series(3)), std::domain_error);
  EXPECT_EQ(euler_derivative(exp_series(3)), S({0, 1, 1, R(1, 2)}));
}

TEST(SeriesProperty, TruncationIsARingHomomorphism) {
  testgen::Gen gen(21);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_series(gen, 10);
    const auto b = random_series(gen, 10);
    const auto full = a * b;
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_EQ((a.truncate(n) * b.truncate(n))[n], full[n]);
    }
  }
}

TEST(SeriesProperty, ExpAndLogAreCompositionalInverses) {
  for (std::size_t order : {1U, 4U, 9U, 16U}) {
    RationalSeries one_plus_t = RationalSeries::one(order) + RationalSeries::variable(order);
    EXPECT_EQ(compose(exp_series(order), log1p_series(order)), one_plus_t);
    RationalSeries expm1 = exp_series(order);
    expm1.set(0, 0);
    EXPECT_EQ(compose(log1p_series(order), expm1), RationalSeries::variable(order));
  }
}

TEST(SeriesProperty, InvertIsTwoSided) {
  testgen::Gen gen(22);
  for (int i = 0; i < 50; ++i) {
    auto a = random_series(gen, 8);
    a.set(0, gen.nonzero_rational(9));
    EXPECT_EQ(a * invert(a), RationalSeries::one(8));
    EXPECT_EQ(invert(a) * a, RationalSeries::one(8));
  }
}

TEST(SeriesProperty, ExpFunctionalEquation) {
  testgen::Gen gen(23);
  const std::size_t order = 7;
  for (int i = 0; i < 30; ++i) {
    auto a = random_series(gen, order);
    auto b = random_series(gen, order);
    a.set(0, 0);
    b.set(0, 0);
    const auto e = exp_series(order);
    EXPECT_EQ(compose(e, a + b), compose(e, a) * compose(e, b));
  }
}

TEST(SeriesProperty, PolynomialCoefficientsEvaluatePointwise) {
  // Evaluating (1+t)^x at x = y gives the binomial series of (1+t)^y for integer y.
  const auto at_three = evaluate_coefficients(binomial_series(5), R(3));
  EXPECT_EQ(at_three, S({1, 3, 3, 1, 0, 0}));
}

}  // namespace
