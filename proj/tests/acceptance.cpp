// Acceptance run: one line per criterion, exact equality throughout.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "polycauchy/combinatorics.hpp"
#include "polycauchy/polycauchy.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/verify.hpp"

using namespace polycauchy;

namespace {

using Clock = std::chrono::steady_clock;

Rational R(long n, long d = 1) { return Rational::normalize(n, d); }

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

bool suite_passes(std::vector<std::string> ids, int n_max) {
  verify::GridConfig cfg;
  cfg.n_max = n_max;
  cfg.identities = std::move(ids);
  const auto report = verify::run_suite(cfg);
  return !report.checks.empty() && report.passed();
}

bool criterion1() {
  for (int n = 0; n <= 14; ++n)
    for (int k = -3; k <= 3; ++k)
      if (poly_closed(n, k) != poly_oracle(n, k)) return false;
  return true;
}

bool criterion2() {
  return suite_passes({"thm1.coeff", "thm1.numbers"}, 12) && number_closed(2, 1) == R(5, 6) &&
         number_closed(2, 2) == R(13, 36) && poly_oracle(2, 2).coefficient(0) == R(13, 36);
}

bool criterion3() {
  return suite_passes({"eq5.k1-reduction"}, 12) && poly_closed(2, 1) == P({R(5, 6), -2, 1}) &&
         poly_oracle(2, 1) == P({R(5, 6), -2, 1});
}

bool criterion4() {
  return suite_passes({"eq34.addition", "difference", "thm2.recurrence", "thm3.recurrence", "eq47.derivative"}, 12);
}

bool criterion5() {
  if (!suite_passes({"thm4.general", "thm4.m1-corrected"}, 12)) return false;
  for (int k = -3; k <= 3; ++k) {
    const auto s = log_power_m1_printed_sides(1, k);
    if (s.holds() || s.rhs != R(1) || s.lhs != R(-1) - pow_int(R(2), 1 - k)) return false;
  }
  return true;
}

bool criterion6() {
  if (!suite_passes({"thm5.bernoulli-basis", "thm5.weights-3way", "thm6.frobenius-basis", "thm7.falling-basis"},
                    10))
    return false;
  const std::vector<Rational> lambdas{R(-1), R(2), R(1, 2), R(-1, 3)};
  for (int n = 0; n <= 10; ++n) {
    for (int k = -3; k <= 3; ++k) {
      const auto p = poly_closed(n, k);
      if (reconstruct(connection_to_falling(n, k).expansion()) != p) return false;
      for (int r = 0; r <= 4; ++r) {
        const auto h = connection_to_bernoulli(n, k, r, BernoulliWeights::HigherOrderBernoulli);
        if (h != connection_to_bernoulli(n, k, r, BernoulliWeights::Narumi)) return false;
        if (h != connection_to_bernoulli(n, k, r, BernoulliWeights::Multinomial)) return false;
        if (reconstruct(h.expansion()) != p) return false;
        for (const auto& lambda : lambdas)
          if (reconstruct(connection_to_frobenius(n, k, r, lambda).expansion()) != p) return false;
      }
    }
  }
  return true;
}

bool criterion7() {
  for (int k = -3; k <= 3; ++k) {
    if (euler_derivative(lif_series(k, 16)) != lif_series(k - 1, 16) - lif_series(k, 16)) return false;
  }
  if (lif_series(0, 16) != exp_series(16)) return false;
  for (int n = 0; n <= 12; ++n) {
    if (poly_closed(n, 0) != shift(falling_factorial_poly(static_cast<std::size_t>(n)), R(-1))) return false;
  }
  return true;
}

bool criterion8() {
  for (int n = 0; n <= 14; ++n) {
    const auto p = falling_factorial_poly(static_cast<std::size_t>(n));
    for (int l = 0; l <= n; ++l)
      if (p.coefficient(static_cast<std::size_t>(l)) != Rational(stirling1(n, l))) return false;
  }
  for (int m = 0; m <= 8; ++m) {
    const auto s = pow_int(log1p_series(14), m);
    for (int l = 0; l <= 14; ++l)
      if (extract_sequence(s, static_cast<std::size_t>(l)) != Rational(factorial(m) * stirling1(l, m))) return false;
  }
  return true;
}

struct CliCase {
  std::vector<std::string> args;
  int code;
  std::function<bool(const std::string&)> accept;
};

bool criterion9() {
  using Json = nlohmann::ordered_json;
  auto json_rows = [](const std::string& out) { return Json::parse(out)["rows"]; };
  const std::vector<CliCase> cases{
      {{"gen", "polycauchy2-number", "--k", "1", "--n-max", "2", "--format", "csv"}, 0,
       [](const std::string& o) { return o == "n,value\n0,\"1/1\"\n1,\"-1/2\"\n2,\"5/6\"\n"; }},
      {{"--format", "json", "gen", "stirling1", "--n-max", "3"}, 0,
       [&](const std::string& o) { return json_rows(o)[3]["value"] == Json::array({"0/1", "2/1", "-3/1", "1/1"}); }},
      {{"--format", "json", "gen", "polycauchy2-poly", "--k", "0", "--n-max", "2"}, 0,
       [&](const std::string& o) { return json_rows(o)[2]["value"] == Json::array({"2/1", "-3/1", "1/1"}); }},
      {{"--format", "json", "expand", "--n", "1", "--k", "2", "--basis", "falling"}, 0,
       [](const std::string& o) {
         const Json j = Json::parse(o);
         return j["rows"][0]["value"] == "-1/4" && j["rows"][1]["value"] == "1/1" && j["check"] == "pass";
       }},
      {{"--format", "json", "expand", "--n", "0", "--k", "-3", "--basis", "bernoulli:2"}, 0,
       [](const std::string& o) {
         const Json j = Json::parse(o);
         return j["rows"].size() == 1 && j["rows"][0]["value"] == "1/1" && j["check"] == "pass";
       }},
      {{"--format", "json", "expand", "--n", "2", "--k", "1", "--basis", "frobenius:1:-1/1"}, 0,
       [](const std::string& o) {
         const Json j = Json::parse(o);
         return j["polynomial"] == Json::array({"5/6", "-2/1", "1/1"}) && j["check"] == "pass";
       }},
      {{"verify", "--n-max", "8"}, 0,
       [](const std::string& o) { return o.find(", failures: 0") != std::string::npos; }},
      {{"--format", "json", "verify", "--identity", "thm4.m1-corrected", "--n-max", "5"}, 0,
       [](const std::string& o) {
         const Json j = Json::parse(o);
         return j["summary"]["identities"].size() == 1 && j["summary"]["identities"][0]["id"] == "thm4.m1-corrected";
       }},
      {{"verify", "--lambda", "1/1"}, 2, [](const std::string&) { return true; }},
      {{"--format", "json", "series", "lif:1", "--order", "2"}, 0,
       [&](const std::string& o) {
         const Json rows = json_rows(o);
         return rows.size() == 3 && rows[0]["coefficient"] == "1/1" && rows[1]["coefficient"] == "1/2" &&
                rows[2]["coefficient"] == "1/6";
       }},
      {{"--format", "json", "series", "polycauchy-gf:1", "--order", "2"}, 0,
       [&](const std::string& o) {
         const Json rows = json_rows(o);
         return rows[0]["coefficient"] == "1/1" && rows[1]["coefficient"] == "-1/2" && rows[2]["coefficient"] == "5/12";
       }},
      {{"--format", "json", "series", "bernoulli2-gf", "--order", "0"}, 0,
       [&](const std::string& o) { return json_rows(o).size() == 1 && json_rows(o)[0]["coefficient"] == "1/1"; }},
      {{"verify"}, 0, [](const std::string& o) { return o.find(", failures: 0") != std::string::npos; }},
  };
  for (const auto& c : cases) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(c.args, out, err);
    bool ok = false;
    try {
      ok = code == c.code && c.accept(out.str());
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      std::cerr << "  cli case failed:";
      for (const auto& a : c.args) std::cerr << ' ' << a;
      std::cerr << " (exit " << code << ")\n";
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* description;
  double limit_seconds;
  bool (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "dual-path closed form equals generating function, n <= 14, k in [-3,3]", 10.0, criterion1},
      {2, "coefficient and number identities from Bernoulli numbers, goldens 5/6 and 13/36", 0.0, criterion2},
      {3, "k = 1 three-way reduction, golden x^2 - 2x + 5/6", 0.0, criterion3},
      {4, "addition, difference, both recurrences and derivative formula on the full grid", 30.0, criterion4},
      {5, "log-power moments, corrected m = 1 form, printed form fails at n = 1", 0.0, criterion5},
      {6, "Bernoulli, Frobenius-Euler and falling-factorial expansions reconstruct exactly", 0.0, criterion6},
      {7, "Lif derivative identity to order 16, Lif_0 = exp, k = 0 reduction", 0.0, criterion7},
      {8, "Stirling table agrees with falling factorials and (log(1+t))^m", 0.0, criterion8},
      {9, "CLI documented examples and default verify grid", 120.0, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      note += " (over time limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.description << " [" << timing << "]"
              << note << '\n';
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
