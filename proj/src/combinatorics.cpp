#include "polycauchy/combinatorics.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polycauchy {

namespace {

void check_index(int n, int limit, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
  if (n > limit) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " exceeds table limit " +
                            std::to_string(limit));
  }
}

class FactorialTable {
 public:
  BigInt at(int n) const {
    check_index(n, kDefaultTableLimit, "factorial");
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= static_cast<std::size_t>(n)) {
      values_.push_back(values_.back() * static_cast<unsigned long>(values_.size()));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> values_;
};

const FactorialTable& factorial_table() {
  static const FactorialTable table;
  return table;
}

}  // namespace

Stirling1Table::Stirling1Table(int limit) : limit_(limit) {}

void Stirling1Table::ensure(int n) const {
  check_index(n, limit_, "stirling1");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < rows_.size()) return;
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({BigInt(1)});
  while (rows_.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = rows_.back();
    const long m = static_cast<long>(rows_.size()) - 1;  // prev holds S1(m, .)
    std::vector<BigInt> next(prev.size() + 1);
    for (std::size_t l = 0; l < next.size(); ++l) {
      BigInt value = 0;
      if (l >= 1) value += prev[l - 1];
      if (l < prev.size()) value -= m * prev[l];
      next[l] = value;
    }
    rows_.push_back(std::move(next));
  }
}

BigInt Stirling1Table::at(int n, int l) const {
  ensure(n);
  if (l < 0 || l > n) return 0;
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

std::vector<BigInt> Stirling1Table::row(int n) const {
  ensure(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)];
}

const Stirling1Table& stirling1_table() {
  static const Stirling1Table table;
  return table;
}

BigInt stirling1(int n, int l) { return stirling1_table().at(n, l); }

BigInt factorial(int n) { return factorial_table().at(n); }

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt multinomial(int a, std::span<const int> parts) {
  if (std::accumulate(parts.begin(), parts.end(), 0) != a) {
    throw std::invalid_argument("multinomial: parts do not sum to the total");
  }
  BigInt denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    denom *= factorial(p);
  }
  return factorial(a) / denom;
}

}  // namespace polycauchy
