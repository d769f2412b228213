#include "polycauchy/sequences.hpp"

#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "memo.hpp"

namespace polycauchy {

namespace {

std::size_t index(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be non-negative");
  return static_cast<std::size_t>(n);
}

void require_lambda(const Rational& lambda) {
  if (lambda == Rational(1)) {
    throw std::invalid_argument("Frobenius-Euler parameter must differ from 1");
  }
}

// n! [t^n] of weight(t) * kernel(t), with the kernel carrying the x-dependence.
Polynomial extract_with_kernel(const RationalSeries& weight, const PolySeries& kernel, std::size_t n) {
  return extract_sequence(lift(weight) * kernel, n);
}

}  // namespace

SequenceParams SequenceParams::make(int n, int k, int alpha, int r, const Rational& lambda, int a) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  require_lambda(lambda);
  return SequenceParams{n, k, alpha, r, lambda, a};
}

RationalSeries lif_series(int k, std::size_t order) {
  RationalSeries s(order);
  Rational inv_factorial(1);
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) inv_factorial /= Rational(static_cast<long>(m));
    s.set(m, inv_factorial * pow_int(Rational(static_cast<long>(m + 1)), -k));
  }
  return s;
}

RationalSeries t_over_log1p_series(std::size_t order) {
  return invert(divide_by_t(log1p_series(order + 1)));
}

RationalSeries expm1_over_t_series(std::size_t order) {
  RationalSeries e = exp_series(order + 1);
  e.set(0, Rational(0));
  return divide_by_t(e);
}

Polynomial bernoulli_2nd_poly(int n) {
  static detail::Memo<int, Polynomial> memo;
  const std::size_t N = index(n, "bernoulli_2nd_poly");
  return memo.get(n, [&] { return extract_with_kernel(t_over_log1p_series(N), binomial_series(N), N); });
}

Rational bernoulli_2nd_number(int n) { return eval(bernoulli_2nd_poly(n), Rational(0)); }

Polynomial bernoulli_high_order_poly(int n, int alpha) {
  static detail::Memo<std::pair<int, int>, Polynomial> memo;
  const std::size_t N = index(n, "bernoulli_high_order_poly");
  return memo.get({n, alpha}, [&] {
    // (t/(e^t-1))^alpha = ((e^t-1)/t)^(-alpha)
    return extract_with_kernel(pow_int(expm1_over_t_series(N), -alpha), exp_x_series(N), N);
  });
}

Polynomial frobenius_euler_poly(int n, int r, const Rational& lambda) {
  require_lambda(lambda);
  if (r < 0) throw std::invalid_argument("frobenius_euler_poly: r must be non-negative");
  static detail::Memo<std::tuple<int, int, Rational>, Polynomial> memo;
  const std::size_t N = index(n, "frobenius_euler_poly");
  return memo.get({n, r, lambda}, [&] {
    const Rational one_minus_lambda = Rational(1) - lambda;
    // (e^t - lambda) / (1 - lambda), a unit-constant series
    RationalSeries u = exp_series(N);
    u.set(0, one_minus_lambda);
    u = u * (Rational(1) / one_minus_lambda);
    return extract_with_kernel(pow_int(u, -r), exp_x_series(N), N);
  });
}

Polynomial narumi_poly(int n, int a) {
  static detail::Memo<std::pair<int, int>, Polynomial> memo;
  const std::size_t N = index(n, "narumi_poly");
  return memo.get({n, a}, [&] {
    // (t/log(1+t))^{-a} = (log(1+t)/t)^a
    const RationalSeries log_over_t = divide_by_t(log1p_series(N + 1));
    return extract_with_kernel(pow_int(log_over_t, a), binomial_series(N), N);
  });
}

Rational bernoulli2nd_convolution(int r, int a) {
  if (r < 0) throw std::invalid_argument("bernoulli2nd_convolution: r must be non-negative");
  if (a < 0) throw std::invalid_argument("bernoulli2nd_convolution: a must be non-negative");
  if (r == 0) return a == 0 ? Rational(1) : Rational(0);

  std::vector<Rational> b;
  for (int j = 0; j <= a; ++j) b.push_back(bernoulli_2nd_number(j));

  std::vector<int> parts(static_cast<std::size_t>(r));
  Rational total;
  // Enumerate every composition of a into r non-negative parts.
  std::function<void(std::size_t, int, Rational)> walk = [&](std::size_t slot, int remaining,
                                                              Rational product) {
    if (slot + 1 == parts.size()) {
      parts[slot] = remaining;
      product *= b[static_cast<std::size_t>(remaining)];
      total += product * Rational(multinomial(a, parts));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[slot] = v;
      walk(slot + 1, remaining - v, product * b[static_cast<std::size_t>(v)]);
    }
  };
  walk(0, a, Rational(1));
  return total;
}

Rational t_over_log1p_power_coefficient(int r, int a) {
  const std::size_t A = index(a, "t_over_log1p_power_coefficient");
  return extract_sequence(pow_int(t_over_log1p_series(A), r), A);
}

Polynomial basis_polynomial(const Basis& basis, int m) {
  const std::size_t M = index(m, "basis_polynomial");
  switch (basis.kind) {
    case BasisKind::Monomial:
      return Polynomial::monomial(M);
    case BasisKind::FallingFactorial:
      return falling_factorial_poly(M);
    case BasisKind::HigherOrderBernoulli:
      return bernoulli_high_order_poly(m, basis.r);
    case BasisKind::FrobeniusEuler:
      return frobenius_euler_poly(m, basis.r, basis.lambda);
  }
  throw std::invalid_argument("unknown basis");
}

std::vector<Polynomial> basis_polynomials(const Basis& basis, int count) {
  std::vector<Polynomial> out;
  for (int m = 0; m < count; ++m) out.push_back(basis_polynomial(basis, m));
  return out;
}

Polynomial reconstruct(const BasisExpansion& expansion) {
  const auto basis = basis_polynomials(expansion.basis, static_cast<int>(expansion.coefficients.size()));
  return combine_basis(expansion.coefficients, basis);
}

}  // namespace polycauchy
