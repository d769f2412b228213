#pragma once

#include <cstddef>
#include <vector>

#include "polycauchy/combinatorics.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"
#include "polycauchy/series.hpp"

// Classical sequences around the poly-Cauchy polynomials.
//
// Stirling numbers and the Lif_k coefficients are closed forms. Every named
// polynomial family below is instead read off its generating function through
// the series module, so the two kinds of computation stay independent.

namespace polycauchy {

/// Parameter bundle for the sequence generators. lambda != 1 is enforced by make().
struct SequenceParams {
  int n = 0;
  int k = 0;
  int alpha = 0;
  int r = 0;
  Rational lambda{0};
  int a = 0;

  /// Throws std::invalid_argument on n < 0, r < 0 or lambda == 1.
  static SequenceParams make(int n, int k, int alpha, int r, const Rational& lambda, int a);
};

/// Lif_k(t) = sum_m t^m / (m! (m+1)^k) for any integer k.
RationalSeries lif_series(int k, std::size_t order);

/// t / log(1+t), built by inverting log(1+t)/t.
RationalSeries t_over_log1p_series(std::size_t order);

/// (e^t - 1) / t.
RationalSeries expm1_over_t_series(std::size_t order);

/// Bernoulli polynomial of the second kind b_n(x): n! [t^n] (t/log(1+t)) (1+t)^x.
Polynomial bernoulli_2nd_poly(int n);

/// b_n = b_n(0).
Rational bernoulli_2nd_number(int n);

/// Higher-order Bernoulli polynomial B_n^(alpha)(x): n! [t^n] (t/(e^t-1))^alpha e^{xt}.
/// alpha may be any integer.
Polynomial bernoulli_high_order_poly(int n, int alpha);

/// Frobenius-Euler polynomial H_n^(r)(x|lambda): n! [t^n] ((1-lambda)/(e^t-lambda))^r e^{xt}.
/// Throws std::invalid_argument for lambda == 1 or r < 0.
Polynomial frobenius_euler_poly(int n, int r, const Rational& lambda);

/// Narumi polynomial N_n^(a)(x): n! [t^n] (t/log(1+t))^{-a} (1+t)^x.
Polynomial narumi_poly(int n, int a);

/// sum over compositions a_1 + ... + a_r = a of multinomial(a; a_1..a_r) b_{a_1} ... b_{a_r}.
/// For r = 0 this is 1 when a = 0 and 0 otherwise.
Rational bernoulli2nd_convolution(int r, int a);

/// a! [t^a] (t/log(1+t))^r.
Rational t_over_log1p_power_coefficient(int r, int a);

/// The m-th element of a basis: x^m, (x)_m, B_m^(r)(x) or H_m^(r)(x|lambda).
Polynomial basis_polynomial(const Basis& basis, int m);

/// Elements 0..count-1 of a basis.
std::vector<Polynomial> basis_polynomials(const Basis& basis, int count);

/// Monomial form of an expansion against any supported basis.
Polynomial reconstruct(const BasisExpansion& expansion);

}  // namespace polycauchy
