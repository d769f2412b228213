#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polycauchy/rational.hpp"

namespace polycauchy {

/// Dense univariate polynomial over Rational in the indeterminate x.
///
/// Coefficient i multiplies x^i. Trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient list and equality is coefficient-wise.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The polynomial x.
  static Polynomial x();
  /// c * x^power.
  static Polynomial monomial(std::size_t power, const Rational& c = Rational(1));

  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const;
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// JSON-style array of canonical rationals, lowest degree first: ["5/6","-2/1","1/1"].
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Exact Horner evaluation p(a).
Rational eval(const Polynomial& p, const Rational& a);

Polynomial derivative(const Polynomial& p);

/// q(x) = p(x + c).
Polynomial shift(const Polynomial& p, const Rational& c);

/// (x)_m = x(x-1)...(x-m+1), with (x)_0 = 1.
Polynomial falling_factorial_poly(std::size_t m);

/// (y)_m evaluated at a rational y.
Rational falling_factorial(const Rational& y, std::size_t m);

enum class BasisKind { Monomial, FallingFactorial, HigherOrderBernoulli, FrobeniusEuler };

/// A polynomial basis tag: B_m^(r)(x) carries r, H_m^(r)(x|lambda) carries r and lambda.
struct Basis {
  BasisKind kind = BasisKind::Monomial;
  int r = 0;
  Rational lambda{};

  static Basis monomial() { return {}; }
  static Basis falling_factorial() { return {BasisKind::FallingFactorial, 0, {}}; }
  static Basis higher_order_bernoulli(int r) { return {BasisKind::HigherOrderBernoulli, r, {}}; }
  static Basis frobenius_euler(int r, const Rational& lambda) {
    return {BasisKind::FrobeniusEuler, r, lambda};
  }

  /// "monomial", "falling", "bernoulli:r" or "frobenius:r:lambda".
  std::string to_string() const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Coefficients of a polynomial against a basis, indexed by basis-element degree.
struct BasisExpansion {
  Basis basis;
  std::vector<Rational> coefficients;

  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Coordinates of p against a basis whose m-th element has degree exactly m.
///
/// The basis must cover degree(p); it is solved top-down by back-substitution.
/// Throws std::invalid_argument if the basis is too short or a basis element
/// has the wrong degree.
std::vector<Rational> coordinates_in_basis(const Polynomial& p, std::span<const Polynomial> basis);

/// sum_m coefficients[m] * basis[m].
Polynomial combine_basis(std::span<const Rational> coefficients, std::span<const Polynomial> basis);

BasisExpansion to_falling_basis(const Polynomial& p);

/// Throws std::invalid_argument when the expansion is not tagged FallingFactorial.
Polynomial from_falling_basis(const BasisExpansion& e);

}  // namespace polycauchy
