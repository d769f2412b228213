#include "polycauchy/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polycauchy/combinatorics.hpp"
#include "polycauchy/errors.hpp"
#include "polycauchy/polycauchy.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/series.hpp"

namespace polycauchy::verify {

namespace {

// Statements use C_n^(k)(x) for the poly-Cauchy polynomials of the second kind.
const std::vector<IdentityDescriptor> kCatalog = {
    {"difference", "C_n^(k)(x+1) - C_n^(k)(x) = n C_{n-1}^(k)(x)", "Section 2, display after Eq. (34)",
     {"n", "k"}},
    {"eq34.addition", "C_n^(k)(x+y) = sum_j C(n,j) C_j^(k)(x) (y)_{n-j}", "Eq. (34)", {"n", "k", "y"}},
    {"eq39.lif-derivative", "t Lif_k'(t) = Lif_{k-1}(t) - Lif_k(t)", "Eq. (39)", {"k"}},
    {"eq47.derivative",
     "d/dx C_n^(k)(x) = (-1)^n n! sum_{l<n} (-1)^{l-1} / ((n-l) l!) C_l^(k)(x)", "Remark after Eq. (47)",
     {"n", "k"}},
    {"eq5.k1-reduction", "C_n^(1)(x) = b_n(x-1) = B_n^(n)(x)", "Eq. (5)", {"n"}},
    {"k0-reduction", "C_n^(0)(x) = (x-1)_n, from Lif_0 = exp", "Eq. (2) with k = 0", {"n"}},
    {"narumi.eq52", "N_n^(a)(x) = B_n^(n+a+1)(x+1)", "Remark after Eq. (51)", {"n", "a"}},
    {"stirling.eq6", "(x)_n = sum_l S1(n,l) x^l", "Eq. (6)", {"n"}},
    {"stirling.eq7", "(log(1+t))^m = m! sum_l S1(l,m) t^l / l!", "Eq. (7)", {"n", "m"}},
    {"thm1.coeff",
     "sum_{m=j}^n (-1)^{m-j} C(m,j) S1(n,m) / (m-j+1)^k = "
     "sum_{l=j-1}^{n-1} (-1)^{l+1-j} C(n-1,l) C(l+1,j) B_{n-1-l}^(n) / (l+2-j)^k",
     "Theorem 1", {"n", "j", "k"}},
    {"thm1.numbers",
     "C_n^(k) = sum_m S1(n,m) (-1)^m / (m+1)^k = sum_l (-1)^{l+1} C(n-1,l) B_{n-1-l}^(n) / (l+2)^k",
     "Theorem 1", {"n", "k"}},
    {"thm2.recurrence",
     "C_{n+1}^(k)(x) = x C_n^(k)(x-1) - sum_j {sum_{l=j}^n S1(n,l) (-1)^{l-j} C(l,j) / (l-j+2)^k} (x-1)^j",
     "Theorem 2", {"n", "k"}},
    {"thm3.recurrence",
     "C_n^(k)(x) = x C_{n-1}^(k)(x-1) + (1/n) sum_l C(n,l) B_l^(l)(1) {C_{n-l}^(k-1)(x-1) - C_{n-l}^(k)(x-1)}",
     "Theorem 3", {"n", "k"}},
    {"thm4.general",
     "sum_l m! C(n,l+m) S1(l+m,m) C_{n-l-m}^(k) = "
     "sum_l (m-1)! C(n-1,l+m-1) S1(l+m-1,m-1) {(m-1) C_{n-l-m}^(k)(-1) + C_{n-l-m}^(k-1)(-1)}",
     "Theorem 4", {"n", "m", "k"}},
    {"thm4.m1-corrected", "C_{n-1}^(k-1)(-1) = sum_{l<n} (-1)^l l! C(n,l+1) C_{n-l-1}^(k)",
     "Theorem 4, case m = 1", {"n", "k"}},
    {"thm5.bernoulli-basis", "C_n^(k)(x) = sum_m C_{n,m} B_m^(r)(x), weights via B, N and multinomial routes",
     "Theorem 5; Eqs. (50), (52), (54)", {"n", "k", "r"}},
    {"thm5.weights-3way", "B_a^(a-r+1)(1) = N_a^(-r)(0) = sum b_{a_1}...b_{a_r} multinomial = a! [t^a](t/log(1+t))^r",
     "Eqs. (50), (52), (54)", {"r", "a"}},
    {"thm6.frobenius-basis", "C_n^(k)(x) = sum_m C_{n,m} H_m^(r)(x|lambda)", "Theorem 6",
     {"n", "k", "r", "lambda"}},
    {"thm7.falling-basis", "C_n^(k)(x) = sum_m C(n,m) C_{n-m}^(k) (x)_m", "Theorem 7", {"n", "k"}},
};

class Runner {
 public:
  Runner(const GridConfig& config, const Overrides& overrides) : cfg_(config), overrides_(overrides) {}

  Polynomial closed(int n, int k) const {
    return overrides_.poly_closed ? overrides_.poly_closed(n, k) : poly_closed(n, k);
  }

  template <class Fn>
  void add(const std::string& id, std::vector<Param> params, Fn&& sides_fn) {
    Check check{id, std::move(params), false, {}};
    try {
      check.sides = sides_fn();
      check.pass = check.sides.size() >= 2 &&
                   std::all_of(check.sides.begin(), check.sides.end(),
                               [&](const std::string& s) { return s == check.sides.front(); });
    } catch (const TruncationError&) {
      throw;
    } catch (const std::exception& e) {
      check.sides = {std::string("error: ") + e.what()};
    }
    checks_.push_back(std::move(check));
  }

  void run(const std::string& id);
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<int> ks() const {
    std::vector<int> out;
    for (int k = cfg_.k_min; k <= cfg_.k_max; ++k) out.push_back(k);
    return out;
  }
  std::vector<int> rs() const {
    std::vector<int> out;
    for (int r = cfg_.r_min; r <= cfg_.r_max; ++r) out.push_back(r);
    return out;
  }

  const GridConfig& cfg_;
  const Overrides& overrides_;
  std::vector<Check> checks_;
};

Param P(const char* name, const Rational& v) { return {name, v}; }

std::vector<std::string> strs(std::initializer_list<Polynomial> ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> strs(std::initializer_list<Rational> qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(q.to_string());
  return out;
}

void Runner::run(const std::string& id) {
  const int N = cfg_.n_max;
  if (id == "difference") {
    for (int n = 1; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)}, [&] {
          const Polynomial p = closed(n, k);
          return strs({shift(p, Rational(1)) - p, closed(n - 1, k) * Rational(n)});
        });
  } else if (id == "eq34.addition") {
    for (int n = 0; n <= N; ++n)
      for (int k : ks())
        for (const auto& y : cfg_.y_values)
          add(id, {P("n", n), P("k", k), P("y", y)},
              [&] { return strs({shift(closed(n, k), y), addition_rhs(n, k, y)}); });
  } else if (id == "eq39.lif-derivative") {
    const auto order = static_cast<std::size_t>(cfg_.lif_order);
    for (int k : ks())
      add(id, {P("k", k)}, [&] {
        return std::vector<std::string>{to_string(euler_derivative(lif_series(k, order))),
                                        to_string(lif_series(k - 1, order) - lif_series(k, order))};
      });
  } else if (id == "eq47.derivative") {
    for (int n = 1; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)},
            [&] { return strs({derivative(closed(n, k)), derivative_formula(n, k)}); });
  } else if (id == "eq5.k1-reduction") {
    for (int n = 0; n <= N; ++n)
      add(id, {P("n", n)}, [&] {
        return strs({closed(n, 1), shift(bernoulli_2nd_poly(n), Rational(-1)), bernoulli_high_order_poly(n, n)});
      });
  } else if (id == "k0-reduction") {
    for (int n = 0; n <= N; ++n)
      add(id, {P("n", n)}, [&] {
        return strs({closed(n, 0), shift(falling_factorial_poly(static_cast<std::size_t>(n)), Rational(-1))});
      });
  } else if (id == "narumi.eq52") {
    for (int n = 0; n <= N; ++n)
      for (int a = -cfg_.r_max; a <= cfg_.r_max; ++a)
        add(id, {P("n", n), P("a", a)},
            [&] { return strs({narumi_poly(n, a), shift(bernoulli_high_order_poly(n, n + a + 1), Rational(1))}); });
  } else if (id == "stirling.eq6") {
    for (int n = 0; n <= N; ++n)
      add(id, {P("n", n)}, [&] {
        std::vector<Rational> c;
        for (const auto& s : stirling1_table().row(n)) c.emplace_back(s);
        return strs({Polynomial(std::move(c)), falling_factorial_poly(static_cast<std::size_t>(n))});
      });
  } else if (id == "stirling.eq7") {
    for (int n = 0; n <= N; ++n)
      for (int m = 0; m <= n; ++m)
        add(id, {P("n", n), P("m", m)}, [&] {
          const auto order = static_cast<std::size_t>(n);
          const Rational from_gf =
              extract_sequence(pow_int(log1p_series(order), m), order) / Rational(factorial(m));
          return strs({Rational(stirling1(n, m)), from_gf});
        });
  } else if (id == "thm1.coeff") {
    for (int n = 1; n <= N; ++n)
      for (int j = 1; j <= n; ++j)
        for (int k : ks())
          add(id, {P("n", n), P("j", j), P("k", k)},
              [&] { return strs({coefficient_closed(n, j, k), coefficient_bernoulli_form(n, j, k)}); });
  } else if (id == "thm1.numbers") {
    for (int n = 1; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)},
            [&] { return strs({eval(closed(n, k), Rational(0)), number_bernoulli_form(n, k)}); });
  } else if (id == "thm2.recurrence") {
    for (int n = 0; n + 1 <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)}, [&] { return strs({closed(n + 1, k), shifted_recurrence_rhs(n, k)}); });
  } else if (id == "thm3.recurrence") {
    for (int n = 1; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)},
            [&] { return strs({closed(n, k), order_lowering_recurrence_rhs(n, k)}); });
  } else if (id == "thm4.general") {
    for (int n = 1; n <= N; ++n)
      for (int m = 1; m <= n; ++m)
        for (int k : ks())
          add(id, {P("n", n), P("m", m), P("k", k)}, [&] {
            const auto s = log_power_moment_sides(n, m, k);
            return strs({s.lhs, s.rhs});
          });
  } else if (id == "thm4.m1-corrected") {
    for (int n = 1; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)}, [&] {
          const auto s = log_power_m1_corollary_sides(n, k);
          return strs({s.lhs, s.rhs});
        });
  } else if (id == "thm5.bernoulli-basis") {
    for (int n = 0; n <= N; ++n)
      for (int k : ks())
        for (int r : rs())
          add(id, {P("n", n), P("k", k), P("r", r)}, [&] {
            return strs({closed(n, k),
                         reconstruct(connection_to_bernoulli(n, k, r, BernoulliWeights::HigherOrderBernoulli).expansion()),
                         reconstruct(connection_to_bernoulli(n, k, r, BernoulliWeights::Narumi).expansion()),
                         reconstruct(connection_to_bernoulli(n, k, r, BernoulliWeights::Multinomial).expansion())});
          });
  } else if (id == "thm5.weights-3way") {
    for (int r : rs())
      for (int a = 0; a <= N; ++a)
        add(id, {P("r", r), P("a", a)}, [&] {
          return strs({bernoulli_basis_weight(r, a, BernoulliWeights::HigherOrderBernoulli),
                       bernoulli_basis_weight(r, a, BernoulliWeights::Narumi),
                       bernoulli_basis_weight(r, a, BernoulliWeights::Multinomial),
                       t_over_log1p_power_coefficient(r, a)});
        });
  } else if (id == "thm6.frobenius-basis") {
    for (int n = 0; n <= N; ++n)
      for (int k : ks())
        for (int r : rs())
          for (const auto& lambda : cfg_.lambdas)
            add(id, {P("n", n), P("k", k), P("r", r), P("lambda", lambda)}, [&] {
              return strs({closed(n, k), reconstruct(connection_to_frobenius(n, k, r, lambda).expansion())});
            });
  } else if (id == "thm7.falling-basis") {
    for (int n = 0; n <= N; ++n)
      for (int k : ks())
        add(id, {P("n", n), P("k", k)},
            [&] { return strs({closed(n, k), from_falling_basis(connection_to_falling(n, k).expansion())}); });
  }
}

bool check_less(const Check& a, const Check& b) {
  if (a.identity != b.identity) return a.identity < b.identity;
  return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
                                      [](const Param& x, const Param& y) {
                                        if (x.name != y.name) return x.name < y.name;
                                        return x.value < y.value;
                                      });
}

// Largest series order an identity touches.
int required_order(const std::string& id, const GridConfig& cfg) {
  return id == "eq39.lif-derivative" ? cfg.lif_order : cfg.n_max + 1;
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() { return kCatalog; }

void GridConfig::validate() const {
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  if (k_min > k_max) throw ConfigError("k range is empty");
  if (r_min < 0 || r_min > r_max) throw ConfigError("r range must be a non-empty range of non-negative integers");
  if (lif_order < 0) throw ConfigError("lif_order must be non-negative");
  for (const auto& lambda : lambdas) {
    if (lambda == Rational(1)) throw ConfigError("Frobenius-Euler parameter must differ from 1");
  }
  for (const auto& id : identities) {
    const bool known = std::any_of(kCatalog.begin(), kCatalog.end(), [&](const auto& d) { return d.id == id; });
    if (!known) throw ConfigError("unknown identity \"" + id + "\"");
  }
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<std::tuple<std::string, std::size_t, std::size_t>> VerificationReport::per_identity() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& c : checks) {
    auto& [total, failed] = counts[c.identity];
    ++total;
    if (!c.pass) ++failed;
  }
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
  for (const auto& [id, tf] : counts) out.emplace_back(id, tf.first, tf.second);
  return out;
}

VerificationReport run_suite(const GridConfig& config, const Overrides& overrides) {
  config.validate();
  std::set<std::string> selected(config.identities.begin(), config.identities.end());
  Runner runner(config, overrides);
  for (const auto& d : kCatalog) {
    if (!selected.empty() && !selected.contains(d.id)) continue;
    try {
      runner.run(d.id);
    } catch (const TruncationError& e) {
      throw ConfigError("identity " + d.id + " needs series truncation order " +
                        std::to_string(required_order(d.id, config)) + ": " + e.what());
    }
  }
  VerificationReport report{config, runner.take()};
  std::stable_sort(report.checks.begin(), report.checks.end(), check_less);
  return report;
}

}  // namespace polycauchy::verify
