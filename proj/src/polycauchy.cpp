#include "polycauchy/polycauchy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "memo.hpp"
#include "polycauchy/combinatorics.hpp"
#include "polycauchy/sequences.hpp"

namespace polycauchy {

namespace {

void require_nonneg(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be non-negative");
}

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": requires n >= 1");
}

Rational q(const BigInt& v) { return Rational(v); }

// 1 / base^k for integer base >= 1 and any integer k.
Rational inv_pow(int base, int k) { return pow_int(Rational(base), -static_cast<std::int64_t>(k)); }

Rational number_at(int n, int k, const Rational& x) { return eval(poly_closed(n, k), x); }

}  // namespace

Rational number_closed(int n, int k) {
  require_nonneg(n, "number_closed");
  static detail::Memo<std::pair<int, int>, Rational> memo;
  return memo.get({n, k}, [&] {
    Rational sum;
    for (int m = 0; m <= n; ++m) sum += q(stirling1(n, m)) * sign_power(m) * inv_pow(m + 1, k);
    return sum;
  });
}

Rational number_bernoulli_form(int n, int k) {
  require_positive(n, "number_bernoulli_form");
  Rational sum;
  for (int l = 0; l <= n - 1; ++l) {
    const Rational b = eval(bernoulli_high_order_poly(n - 1 - l, n), Rational(0));
    sum += sign_power(l + 1) * q(binomial(n - 1, l)) * b * inv_pow(l + 2, k);
  }
  return sum;
}

Rational coefficient_closed(int n, int j, int k) {
  require_nonneg(n, "coefficient_closed");
  if (j < 0 || j > n) return Rational(0);
  Rational sum;
  for (int m = j; m <= n; ++m) {
    sum += sign_power(m - j) * q(binomial(m, j)) * inv_pow(m - j + 1, k) * q(stirling1(n, m));
  }
  return sum;
}

Rational coefficient_bernoulli_form(int n, int j, int k) {
  require_positive(n, "coefficient_bernoulli_form");
  if (j < 1 || j > n) throw std::invalid_argument("coefficient_bernoulli_form: requires 1 <= j <= n");
  Rational sum;
  for (int l = j - 1; l <= n - 1; ++l) {
    const Rational b = eval(bernoulli_high_order_poly(n - 1 - l, n), Rational(0));
    sum += sign_power(l + 1 - j) * q(binomial(n - 1, l)) * q(binomial(l + 1, j)) * b * inv_pow(l + 2 - j, k);
  }
  return sum;
}

Polynomial poly_closed(int n, int k) {
  require_nonneg(n, "poly_closed");
  static detail::Memo<std::pair<int, int>, Polynomial> memo;
  return memo.get({n, k}, [&] {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = coefficient_closed(n, j, k);
    return Polynomial(std::move(c));
  });
}

RationalSeries polycauchy_number_gf(int k, std::size_t order) {
  return compose(lif_series(k, order), -log1p_series(order));
}

PolySeries polycauchy_gf(int k, std::size_t order) {
  return lift(polycauchy_number_gf(k, order)) * binomial_series(order);
}

Polynomial poly_oracle(int n, int k) {
  require_nonneg(n, "poly_oracle");
  static detail::Memo<std::pair<int, int>, Polynomial> memo;
  return memo.get({n, k}, [&] {
    const auto N = static_cast<std::size_t>(n);
    return extract_sequence(polycauchy_gf(k, N), N);
  });
}

Polynomial addition_rhs(int n, int k, const Rational& y) {
  require_nonneg(n, "addition_rhs");
  Polynomial sum;
  for (int j = 0; j <= n; ++j) {
    const Rational weight =
        q(binomial(n, j)) * falling_factorial(y, static_cast<std::size_t>(n - j));
    sum += poly_closed(j, k) * weight;
  }
  return sum;
}

IdentitySides<Polynomial> addition_sides(int n, int k, const Rational& y) {
  return {shift(poly_closed(n, k), y), addition_rhs(n, k, y)};
}

IdentitySides<Polynomial> difference_sides(int n, int k) {
  require_positive(n, "difference_sides");
  const Polynomial p = poly_closed(n, k);
  return {shift(p, Rational(1)) - p, poly_closed(n - 1, k) * Rational(n)};
}

Polynomial shifted_recurrence_rhs(int n, int k) {
  require_nonneg(n, "shifted_recurrence_rhs");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational inner;
    for (int l = j; l <= n; ++l) {
      inner += q(stirling1(n, l)) * sign_power(l - j) * inv_pow(l - j + 2, k) * q(binomial(l, j));
    }
    c[static_cast<std::size_t>(j)] = inner;
  }
  const Polynomial correction = shift(Polynomial(std::move(c)), Rational(-1));
  return Polynomial::x() * shift(poly_closed(n, k), Rational(-1)) - correction;
}

Polynomial order_lowering_recurrence_rhs(int n, int k) {
  require_positive(n, "order_lowering_recurrence_rhs");
  Polynomial sum;
  for (int l = 0; l <= n; ++l) {
    const Rational weight = q(binomial(n, l)) * eval(bernoulli_high_order_poly(l, l), Rational(1));
    const Polynomial diff = shift(poly_closed(n - l, k - 1), Rational(-1)) - shift(poly_closed(n - l, k), Rational(-1));
    sum += diff * weight;
  }
  return Polynomial::x() * shift(poly_closed(n - 1, k), Rational(-1)) + sum * Rational::normalize(1, n);
}

IdentitySides<Rational> log_power_moment_sides(int n, int m, int k) {
  if (m < 1 || m > n) throw std::invalid_argument("log_power_moment_sides: requires 1 <= m <= n");
  Rational lhs;
  Rational rhs;
  const Rational minus_one(-1);
  for (int l = 0; l <= n - m; ++l) {
    const int idx = n - l - m;
    lhs += q(factorial(m)) * q(binomial(n, l + m)) * q(stirling1(l + m, m)) * number_closed(idx, k);
    const Rational bracket = Rational(m - 1) * number_at(idx, k, minus_one) + number_at(idx, k - 1, minus_one);
    rhs += q(factorial(m - 1)) * q(binomial(n - 1, l + m - 1)) * q(stirling1(l + m - 1, m - 1)) * bracket;
  }
  return {lhs, rhs};
}

namespace {

Rational m1_corollary_sum(int n, int k) {
  Rational sum;
  for (int l = 0; l <= n - 1; ++l) {
    sum += sign_power(l) * q(factorial(l)) * q(binomial(n, l + 1)) * number_closed(n - l - 1, k);
  }
  return sum;
}

}  // namespace

IdentitySides<Rational> log_power_m1_corollary_sides(int n, int k) {
  require_positive(n, "log_power_m1_corollary_sides");
  return {number_at(n - 1, k - 1, Rational(-1)), m1_corollary_sum(n, k)};
}

IdentitySides<Rational> log_power_m1_printed_sides(int n, int k) {
  require_positive(n, "log_power_m1_printed_sides");
  return {number_at(n, k - 1, Rational(-1)), m1_corollary_sum(n, k)};
}

Polynomial derivative_formula(int n, int k) {
  require_positive(n, "derivative_formula");
  Polynomial sum;
  for (int l = 0; l <= n - 1; ++l) {
    const Rational weight = sign_power(l - 1) / (Rational(n - l) * q(factorial(l)));
    sum += poly_closed(l, k) * weight;
  }
  return sum * (sign_power(n) * q(factorial(n)));
}

Rational bernoulli_basis_weight(int r, int a, BernoulliWeights route) {
  switch (route) {
    case BernoulliWeights::HigherOrderBernoulli:
      return eval(bernoulli_high_order_poly(a, a - r + 1), Rational(1));
    case BernoulliWeights::Narumi:
      return eval(narumi_poly(a, -r), Rational(0));
    case BernoulliWeights::Multinomial:
      return bernoulli2nd_convolution(r, a);
  }
  throw std::invalid_argument("unknown weight route");
}

ConnectionMatrix connection_to_bernoulli(int n, int k, int r, BernoulliWeights route) {
  require_nonneg(n, "connection_to_bernoulli");
  if (r < 0) throw std::invalid_argument("connection_to_bernoulli: r must be non-negative");
  std::vector<Rational> weights;
  for (int a = 0; a <= n; ++a) weights.push_back(bernoulli_basis_weight(r, a, route));

  ConnectionMatrix out{n, Basis::higher_order_bernoulli(r), std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
  for (int m = 0; m <= n; ++m) {
    Rational entry;
    for (int l = 0; l <= n - m; ++l) {
      const Rational outer = q(binomial(n, l + m)) * q(stirling1(l + m, m));
      if (outer.is_zero()) continue;
      for (int a = 0; a <= n - m - l; ++a) {
        entry += outer * q(binomial(n - m - l, a)) * weights[static_cast<std::size_t>(a)] *
                 number_closed(n - m - l - a, k);
      }
    }
    out.entries[static_cast<std::size_t>(m)] = entry;
  }
  return out;
}

ConnectionMatrix connection_to_frobenius(int n, int k, int r, const Rational& lambda) {
  require_nonneg(n, "connection_to_frobenius");
  if (r < 0) throw std::invalid_argument("connection_to_frobenius: r must be non-negative");
  if (lambda == Rational(1)) throw std::invalid_argument("Frobenius-Euler parameter must differ from 1");
  const Rational inv_one_minus_lambda = Rational(1) / (Rational(1) - lambda);

  ConnectionMatrix out{n, Basis::frobenius_euler(r, lambda), std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
  for (int m = 0; m <= n; ++m) {
    Rational entry;
    for (int l = 0; l <= n - m; ++l) {
      const Rational outer = q(binomial(n, l + m)) * q(stirling1(l + m, m));
      if (outer.is_zero()) continue;
      const int rest = n - m - l;
      // (rest)_a vanishes for a > rest, which also keeps the C index non-negative.
      for (int a = 0; a <= std::min(r, rest); ++a) {
        entry += outer * q(binomial(r, a)) * falling_factorial(Rational(rest), static_cast<std::size_t>(a)) *
                 pow_int(inv_one_minus_lambda, a) * number_closed(rest - a, k);
      }
    }
    out.entries[static_cast<std::size_t>(m)] = entry;
  }
  return out;
}

ConnectionMatrix connection_to_falling(int n, int k) {
  require_nonneg(n, "connection_to_falling");
  ConnectionMatrix out{n, Basis::falling_factorial(), std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
  for (int m = 0; m <= n; ++m) {
    out.entries[static_cast<std::size_t>(m)] = q(binomial(n, m)) * number_closed(n - m, k);
  }
  return out;
}

}  // namespace polycauchy
