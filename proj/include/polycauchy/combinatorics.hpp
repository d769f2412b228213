#pragma once

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "polycauchy/rational.hpp"

namespace polycauchy {

/// Largest index the shared memo tables grow to before refusing with std::out_of_range.
inline constexpr int kDefaultTableLimit = 512;

/// Signed Stirling numbers of the first kind, S1(n, l) for 0 <= l <= n <= limit.
///
/// Rows are filled on demand from S1(n+1, l) = S1(n, l-1) - n S1(n, l) and
/// never change afterwards. Concurrent readers are safe; growth takes a writer lock.
class Stirling1Table {
 public:
  explicit Stirling1Table(int limit = kDefaultTableLimit);

  int limit() const { return limit_; }

  /// S1(n, l); 0 when l > n or l < 0. Throws std::out_of_range when n > limit,
  /// std::invalid_argument when n < 0.
  BigInt at(int n, int l) const;

  /// The row S1(n, 0..n).
  std::vector<BigInt> row(int n) const;

 private:
  void ensure(int n) const;

  int limit_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<BigInt>> rows_;
};

/// Process-wide table shared by every operation in the library.
const Stirling1Table& stirling1_table();

/// S1(n, l) from the shared table.
BigInt stirling1(int n, int l);

/// n! for 0 <= n <= kDefaultTableLimit.
BigInt factorial(int n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// a! / (parts[0]! ... parts[r-1]!); parts must sum to a.
BigInt multinomial(int a, std::span<const int> parts);

/// (-1)^e as a Rational.
inline Rational sign_power(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace polycauchy
