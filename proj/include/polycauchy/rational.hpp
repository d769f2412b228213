#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polycauchy {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational number num/den in canonical form.
///
/// The denominator is always positive and coprime to the numerator, and zero
/// is stored as 0/1. Every operation returns a canonical value, so equality of
/// two Rationals is equality of their components.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Builds num/den in canonical form. Throws std::domain_error("division by zero") if den == 0.
  static Rational normalize(const BigInt& num, const BigInt& den);

  /// Parses "num/den" or a bare integer, with optional leading '-' or '+'.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical "num/den" form; integers serialize as "n/1".
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// base^e for any integer e. Throws std::domain_error when base is zero and e < 0.
Rational pow_int(const Rational& base, std::int64_t e);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace polycauchy
