#include "polycauchy/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polycauchy {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
  }
  // mpz_class rejects a leading '+'.
  return BigInt(std::string(text[0] == '+' ? text.substr(1) : text), 10);
}

}  // namespace

Rational Rational::normalize(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational q;
  q.value_ = mpq_class(num, den);
  q.value_.canonicalize();
  return q;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  return normalize(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational q;
  q.value_ = -value_;
  return q;
}

Rational pow_int(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("zero raised to a negative power");
    return pow_int(Rational(1) / base, -e);
  }
  BigInt num;
  BigInt den;
  const auto exp = static_cast<unsigned long>(e);
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
  return Rational::normalize(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace polycauchy
