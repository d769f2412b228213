#pragma once

#include <stdexcept>
#include <string>

namespace polycauchy {

/// A coefficient was requested beyond the stored truncation order of a series,
/// or two series of different orders were combined.
class TruncationError : public std::out_of_range {
 public:
  explicit TruncationError(const std::string& what) : std::out_of_range(what) {}
};

/// Raised by series inversion when the constant term is not a unit.
class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError() : std::domain_error("series not invertible") {}
};

}  // namespace polycauchy
