#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace polycauchy::detail {

// Thread-safe memo table. Two threads may race to compute the same key; the
// first insert wins and both return equal values.
template <class Key, class Value>
class Memo {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> values_;
};

}  // namespace polycauchy::detail
