#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

namespace polycauchy::verify {

/// Raised for an invalid grid, an unknown identity id, or an identity whose
/// series truncation order cannot be met.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameter grid for a verification run.
struct GridConfig {
  int n_max = 12;
  int k_min = -3;
  int k_max = 3;
  int r_min = 0;
  int r_max = 4;
  std::vector<Rational> lambdas{Rational(-1), Rational(2), Rational::normalize(1, 2), Rational::normalize(-1, 3)};
  std::vector<Rational> y_values{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2),
                                 Rational::normalize(1, 2)};
  /// Truncation order for the Lif derivative check, which works on whole series.
  int lif_order = 16;
  /// Identity ids to run; empty runs the whole catalog.
  std::vector<std::string> identities;

  /// Throws ConfigError unless n_max >= 1, k_min <= k_max, 0 <= r_min <= r_max,
  /// lif_order >= 0, every lambda != 1 and every id is in the catalog.
  void validate() const;
};

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  std::string location;
  /// Names of the grid parameters a single check is indexed by.
  std::vector<std::string> parameters;
};

/// The fixed identity catalog, in id order.
const std::vector<IdentityDescriptor>& catalog();

struct Param {
  std::string name;
  Rational value;
  friend bool operator==(const Param&, const Param&) = default;
};

/// One evaluated grid point. Every side is serialized exactly; the check
/// passes when all sides are equal.
struct Check {
  std::string identity;
  std::vector<Param> params;
  bool pass = false;
  std::vector<std::string> sides;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  GridConfig config;
  std::vector<Check> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  /// (identity id, checks, failures) per identity that ran.
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> per_identity() const;
};

/// Replacement routes for fault injection. An empty function keeps the library route.
struct Overrides {
  std::function<Polynomial(int n, int k)> poly_closed;
};

/// Runs every selected identity at every grid point. Failures never stop the
/// run. Checks come back sorted by identity id, then parameter tuple.
VerificationReport run_suite(const GridConfig& config, const Overrides& overrides = {});

}  // namespace polycauchy::verify
