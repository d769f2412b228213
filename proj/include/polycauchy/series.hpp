#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycauchy/errors.hpp"
#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy {

/// Ring operations the series code needs beyond +, -, * and value construction.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool is_unit(const Rational& a) { return !a.is_zero(); }
  static Rational unit_inverse(const Rational& a) { return Rational(1) / a; }
};

template <>
struct RingTraits<Polynomial> {
  static Polynomial one() { return Polynomial(1); }
  static bool is_zero(const Polynomial& a) { return a.is_zero(); }
  static bool is_unit(const Polynomial& a) { return a.degree() == 0; }
  static Polynomial unit_inverse(const Polynomial& a) {
    return Polynomial(Rational(1) / a.coefficient(0));
  }
};

/// Formal power series in t over R, known exactly up to and including t^order.
///
/// Coefficients past the order are never stored; binary operations require
/// matching orders and throw TruncationError otherwise.
template <class R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Series with the given coefficients; order is coefficients.size() - 1.
  explicit TruncatedSeries(std::vector<R> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(const R& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static TruncatedSeries one(std::size_t order) { return constant(Traits::one(), order); }

  /// The series t (zero at order 0).
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Traits::one();
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  /// Coefficient of t^n; throws TruncationError when n > order.
  const R& coefficient(std::size_t n) const {
    if (n > order()) {
      throw TruncationError("insufficient truncation order: need t^" + std::to_string(n) +
                            ", series is known to t^" + std::to_string(order()));
    }
    return coeffs_[n];
  }
  const R& operator[](std::size_t n) const { return coefficient(n); }

  void set(std::size_t n, R value) {
    (void)coefficient(n);
    coeffs_[n] = std::move(value);
  }

  /// Drops every coefficient above new_order (new_order <= order).
  TruncatedSeries truncate(std::size_t new_order) const {
    (void)coefficient(new_order);
    return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries out(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
    for (auto& x : a.coeffs_) x = x * c;
    return a;
  }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return std::move(a) * c; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const {
    if (other.order() != order()) {
      throw TruncationError("mismatched truncation orders: " + std::to_string(order()) + " vs " +
                            std::to_string(other.order()));
    }
  }

  std::vector<R> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Polynomial>;

/// b with a*b = 1 through the order of a. Throws NotInvertibleError if a_0 is not a unit.
template <class R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& a) {
  using Traits = RingTraits<R>;
  if (!Traits::is_unit(a[0])) throw NotInvertibleError();
  const R inv0 = Traits::unit_inverse(a[0]);
  TruncatedSeries<R> b(a.order());
  b.set(0, inv0);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    R acc{};
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b.set(n, -(acc * inv0));
  }
  return b;
}

/// f(g(t)) by Horner's scheme. g must have zero constant term (a delta series
/// or zero); throws std::domain_error otherwise.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  if (f.order() != g.order()) throw TruncationError("mismatched truncation orders in compose");
  if (!RingTraits<R>::is_zero(g[0])) {
    throw std::domain_error("compose: inner series must have zero constant term");
  }
  const std::size_t order = f.order();
  TruncatedSeries<R> acc(order);
  for (std::size_t i = order + 1; i-- > 0;) {
    acc = acc * g;
    acc.set(0, acc[0] + f[i]);
  }
  return acc;
}

/// a^e; negative exponents go through invert.
template <class R>
TruncatedSeries<R> pow_int(const TruncatedSeries<R>& a, std::int64_t e) {
  if (e < 0) return pow_int(invert(a), -e);
  TruncatedSeries<R> result = TruncatedSeries<R>::one(a.order());
  TruncatedSeries<R> base = a;
  auto k = static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

/// n! [t^n] a, i.e. the n-th term of the exponential generating function a.
template <class R>
R extract_sequence(const TruncatedSeries<R>& a, std::size_t n) {
  R value = a[n];
  Rational factorial(1);
  for (std::size_t i = 2; i <= n; ++i) factorial *= Rational(static_cast<long>(i));
  return value * factorial;
}

/// t * d/dt a, which keeps the order: coefficient i becomes i * a_i.
template <class R>
TruncatedSeries<R> euler_derivative(const TruncatedSeries<R>& a) {
  TruncatedSeries<R> out = a;
  for (std::size_t i = 0; i <= a.order(); ++i) out.set(i, a[i] * Rational(static_cast<long>(i)));
  return out;
}

/// a / t for a with zero constant term; the result is known to one order less.
template <class R>
TruncatedSeries<R> divide_by_t(const TruncatedSeries<R>& a) {
  if (!RingTraits<R>::is_zero(a[0])) throw std::domain_error("divide_by_t: nonzero constant term");
  if (a.order() == 0) throw TruncationError("divide_by_t: series of order 0 has no known quotient");
  std::vector<R> c(a.coefficients().begin() + 1, a.coefficients().end());
  return TruncatedSeries<R>(std::move(c));
}

/// Embeds a rational series into the polynomial coefficient ring as constants.
PolySeries lift(const RationalSeries& a);

/// sum_i a_i(y) t^i: evaluates every polynomial coefficient at y.
RationalSeries evaluate_coefficients(const PolySeries& a, const Rational& y);

/// log(1+t) = sum_{i>=1} (-1)^{i-1} t^i / i.
RationalSeries log1p_series(std::size_t order);

/// e^t = sum t^i / i!.
RationalSeries exp_series(std::size_t order);

/// (1+t)^x, whose t^j coefficient is the polynomial (x)_j / j!.
PolySeries binomial_series(std::size_t order);

/// e^{xt}, whose t^j coefficient is x^j / j!.
PolySeries exp_x_series(std::size_t order);

/// ["c0","c1",...] in canonical rational form.
std::string to_string(const RationalSeries& a);

}  // namespace polycauchy
