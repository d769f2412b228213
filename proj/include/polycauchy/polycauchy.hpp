#pragma once

#include <vector>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"
#include "polycauchy/series.hpp"

// Poly-Cauchy numbers and polynomials of the second kind, C_n^(k)(x), defined
// by the generating function
//
//     Lif_k(-log(1+t)) (1+t)^x = sum_n C_n^(k)(x) t^n / n!
//
// for any integer k. The closed forms, recurrences and basis expansions here
// are all cross-checked against that generating function and against each other.

namespace polycauchy {

/// Both sides of an identity, computed along separate routes.
template <class T>
struct IdentitySides {
  T lhs;
  T rhs;
  bool holds() const { return lhs == rhs; }
};

/// C_n^(k) = sum_{m=0}^{n} S1(n,m) (-1)^m / (m+1)^k.
Rational number_closed(int n, int k);

/// C_n^(k) = sum_{l=0}^{n-1} (-1)^{l+1} C(n-1,l) B_{n-1-l}^(n) / (l+2)^k, for n >= 1.
/// Throws std::invalid_argument for n = 0.
Rational number_bernoulli_form(int n, int k);

/// Coefficient of x^j in C_n^(k)(x) from the Stirling sum
/// sum_{m=j}^{n} (-1)^{m-j} C(m,j) S1(n,m) / (m-j+1)^k.
Rational coefficient_closed(int n, int j, int k);

/// Coefficient of x^j (1 <= j <= n) from higher-order Bernoulli numbers:
/// sum_{l=j-1}^{n-1} (-1)^{l+1-j} C(n-1,l) C(l+1,j) B_{n-1-l}^(n) / (l+2-j)^k.
Rational coefficient_bernoulli_form(int n, int j, int k);

/// C_n^(k)(x) with every coefficient from coefficient_closed. Monic of degree n.
Polynomial poly_closed(int n, int k);

/// Lif_k(-log(1+t)) (1+t)^x truncated at the given order.
PolySeries polycauchy_gf(int k, std::size_t order);

/// Lif_k(-log(1+t)), the number-level generating function.
RationalSeries polycauchy_number_gf(int k, std::size_t order);

/// C_n^(k)(x) = n! [t^n] polycauchy_gf(k, n), the generating-function oracle.
Polynomial poly_oracle(int n, int k);

/// sum_j C(n,j) C_j^(k)(x) (y)_{n-j}, which equals C_n^(k)(x + y).
Polynomial addition_rhs(int n, int k, const Rational& y);

/// lhs = C_n^(k)(x + y) by shifting, rhs = addition_rhs.
IdentitySides<Polynomial> addition_sides(int n, int k, const Rational& y);

/// lhs = C_n^(k)(x+1) - C_n^(k)(x), rhs = n C_{n-1}^(k)(x). Requires n >= 1.
IdentitySides<Polynomial> difference_sides(int n, int k);

/// x C_n^(k)(x-1) - sum_j {sum_{l=j}^{n} S1(n,l) (-1)^{l-j} C(l,j) / (l-j+2)^k} (x-1)^j,
/// which equals C_{n+1}^(k)(x).
Polynomial shifted_recurrence_rhs(int n, int k);

/// x C_{n-1}^(k)(x-1) + (1/n) sum_{l=0}^{n} C(n,l) B_l^(l)(1) {C_{n-l}^(k-1)(x-1) - C_{n-l}^(k)(x-1)},
/// which equals C_n^(k)(x). Requires n >= 1.
Polynomial order_lowering_recurrence_rhs(int n, int k);

/// The pairing <(log(1+t))^m Lif_k(-log(1+t)) | x^n> computed two ways, for n >= m >= 1:
///   lhs = sum_l m! C(n,l+m) S1(l+m,m) C_{n-l-m}^(k)
///   rhs = sum_l (m-1)! C(n-1,l+m-1) S1(l+m-1,m-1) {(m-1) C_{n-l-m}^(k)(-1) + C_{n-l-m}^(k-1)(-1)}
/// Throws std::invalid_argument unless 1 <= m <= n.
IdentitySides<Rational> log_power_moment_sides(int n, int m, int k);

/// The m = 1 case reduced to a single term: for n >= 1,
///   C_{n-1}^(k-1)(-1) = sum_{l=0}^{n-1} (-1)^l l! C(n,l+1) C_{n-l-1}^(k).
IdentitySides<Rational> log_power_m1_corollary_sides(int n, int k);

/// The same sum paired with C_n^(k-1)(-1) on the left, as it is commonly printed.
/// This form does not hold; it is kept to document the discrepancy.
IdentitySides<Rational> log_power_m1_printed_sides(int n, int k);

/// (-1)^n n! sum_{l=0}^{n-1} (-1)^{l-1} / ((n-l) l!) C_l^(k)(x), equal to d/dx C_n^(k)(x). Requires n >= 1.
Polynomial derivative_formula(int n, int k);

/// Three interchangeable computations of the weight a! [t^a] (t/log(1+t))^r.
enum class BernoulliWeights {
  HigherOrderBernoulli,  // B_a^(a-r+1)(1)
  Narumi,                // N_a^(-r)(0)
  Multinomial,           // convolution of Bernoulli numbers of the second kind
};

Rational bernoulli_basis_weight(int r, int a, BernoulliWeights route);

/// Row C_{n,0..n} of connection constants expressing C_n^(k)(x) in a target basis.
struct ConnectionMatrix {
  int n = 0;
  Basis basis;
  std::vector<Rational> entries;

  BasisExpansion expansion() const { return {basis, entries}; }
  friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;
};

/// C_n^(k)(x) = sum_m C_{n,m} B_m^(r)(x), with
/// C_{n,m} = sum_l sum_a C(n,l+m) C(n-m-l,a) S1(l+m,m) w_a C_{n-m-l-a}^(k).
ConnectionMatrix connection_to_bernoulli(int n, int k, int r,
                                         BernoulliWeights route = BernoulliWeights::HigherOrderBernoulli);

/// C_n^(k)(x) = sum_m C_{n,m} H_m^(r)(x|lambda), with
/// C_{n,m} = sum_l sum_{a=0}^{r} C(n,l+m) C(r,a) (n-m-l)_a (1-lambda)^{-a} S1(l+m,m) C_{n-m-l-a}^(k).
/// Throws std::invalid_argument for lambda == 1.
ConnectionMatrix connection_to_frobenius(int n, int k, int r, const Rational& lambda);

/// C_n^(k)(x) = sum_m C(n,m) C_{n-m}^(k) (x)_m.
ConnectionMatrix connection_to_falling(int n, int k);

}  // namespace polycauchy
