#include "polycauchy/series.hpp"

namespace polycauchy {

PolySeries lift(const RationalSeries& a) {
  std::vector<Polynomial> c;
  c.reserve(a.order() + 1);
  for (const auto& q : a.coefficients()) c.emplace_back(q);
  return PolySeries(std::move(c));
}

RationalSeries evaluate_coefficients(const PolySeries& a, const Rational& y) {
  std::vector<Rational> c;
  c.reserve(a.order() + 1);
  for (const auto& p : a.coefficients()) c.push_back(eval(p, y));
  return RationalSeries(std::move(c));
}

RationalSeries log1p_series(std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 1; i <= order; ++i) {
    const long sign = (i % 2 == 1) ? 1 : -1;
    s.set(i, Rational::normalize(sign, static_cast<long>(i)));
  }
  return s;
}

RationalSeries exp_series(std::size_t order) {
  RationalSeries s(order);
  Rational term(1);
  s.set(0, term);
  for (std::size_t i = 1; i <= order; ++i) {
    term /= Rational(static_cast<long>(i));
    s.set(i, term);
  }
  return s;
}

PolySeries binomial_series(std::size_t order) {
  PolySeries s(order);
  Polynomial falling(1);
  Rational inv_factorial(1);
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) {
      falling *= Polynomial::x() - Polynomial(Rational(static_cast<long>(j - 1)));
      inv_factorial /= Rational(static_cast<long>(j));
    }
    s.set(j, falling * inv_factorial);
  }
  return s;
}

PolySeries exp_x_series(std::size_t order) {
  PolySeries s(order);
  Rational inv_factorial(1);
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) inv_factorial /= Rational(static_cast<long>(j));
    s.set(j, Polynomial::monomial(j, inv_factorial));
  }
  return s;
}

std::string to_string(const RationalSeries& a) {
  std::string s = "[";
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (i > 0) s += ",";
    s += "\"" + a[i].to_string() + "\"";
  }
  return s + "]";
}

}  // namespace polycauchy
