#include "polycauchy/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace polycauchy {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::x() { return monomial(1); }

Polynomial Polynomial::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

std::string Polynomial::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) s += ",";
    s += "\"" + coeffs_[i].to_string() + "\"";
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Rational eval(const Polynomial& p, const Rational& a) {
  Rational acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& p, const Rational& c) {
  // Horner over the polynomial ring with x -> x + c.
  const Polynomial x_plus_c = Polynomial::x() + Polynomial(c);
  Polynomial acc;
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x_plus_c + Polynomial(*it);
  return acc;
}

Polynomial falling_factorial_poly(std::size_t m) {
  Polynomial acc(1);
  for (std::size_t i = 0; i < m; ++i) {
    acc *= Polynomial::x() - Polynomial(Rational(static_cast<long>(i)));
  }
  return acc;
}

Rational falling_factorial(const Rational& y, std::size_t m) {
  Rational acc(1);
  for (std::size_t i = 0; i < m; ++i) acc *= y - Rational(static_cast<long>(i));
  return acc;
}

std::string Basis::to_string() const {
  switch (kind) {
    case BasisKind::Monomial:
      return "monomial";
    case BasisKind::FallingFactorial:
      return "falling";
    case BasisKind::HigherOrderBernoulli:
      return "bernoulli:" + std::to_string(r);
    case BasisKind::FrobeniusEuler:
      return "frobenius:" + std::to_string(r) + ":" + lambda.to_string();
  }
  return {};
}

std::vector<Rational> coordinates_in_basis(const Polynomial& p, std::span<const Polynomial> basis) {
  if (p.degree() >= static_cast<int>(basis.size())) {
    throw std::invalid_argument("basis does not reach the degree of the polynomial");
  }
  std::vector<Rational> out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  Polynomial rest = p;
  for (int m = p.degree(); m >= 0; --m) {
    const auto& element = basis[static_cast<std::size_t>(m)];
    if (element.degree() != m) throw std::invalid_argument("basis element has the wrong degree");
    const Rational c = rest.coefficient(static_cast<std::size_t>(m)) / element.leading_coefficient();
    out[static_cast<std::size_t>(m)] = c;
    rest -= element * c;
  }
  return out;
}

Polynomial combine_basis(std::span<const Rational> coefficients, std::span<const Polynomial> basis) {
  if (coefficients.size() > basis.size()) {
    throw std::invalid_argument("more coefficients than basis elements");
  }
  Polynomial acc;
  for (std::size_t m = 0; m < coefficients.size(); ++m) acc += basis[m] * coefficients[m];
  return acc;
}

namespace {

std::vector<Polynomial> falling_basis(std::size_t count) {
  std::vector<Polynomial> basis;
  basis.reserve(count);
  for (std::size_t m = 0; m < count; ++m) basis.push_back(falling_factorial_poly(m));
  return basis;
}

}  // namespace

BasisExpansion to_falling_basis(const Polynomial& p) {
  const auto basis = falling_basis(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  return {Basis::falling_factorial(), coordinates_in_basis(p, basis)};
}

Polynomial from_falling_basis(const BasisExpansion& e) {
  if (e.basis.kind != BasisKind::FallingFactorial) {
    throw std::invalid_argument("expected a falling-factorial expansion, got " + e.basis.to_string());
  }
  const auto basis = falling_basis(e.coefficients.size());
  return combine_basis(e.coefficients, basis);
}

}  // namespace polycauchy
