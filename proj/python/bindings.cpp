#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "polycauchy/combinatorics.hpp"
#include "polycauchy/polycauchy.hpp"
#include "polycauchy/report.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/verify.hpp"

namespace py = pybind11;
using namespace polycauchy;
using verify::Json;

namespace {

// Rationals cross the boundary as fractions.Fraction, built from the canonical "num/den" string.
py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.to_string());
}

py::list to_py(std::span<const Rational> qs) {
  py::list out;
  for (const auto& q : qs) out.append(to_py(q));
  return out;
}

py::list to_py(const Polynomial& p) { return to_py(p.coefficients()); }

py::list to_py(const RationalSeries& s) { return to_py(std::span<const Rational>(s.coefficients())); }

// Accepts int, str or Fraction.
Rational from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Basis parse_basis(const std::string& spec) {
  if (spec == "falling") return Basis::falling_factorial();
  const auto first = spec.find(':');
  if (first == std::string::npos) throw std::invalid_argument("unknown basis \"" + spec + "\"");
  const std::string kind = spec.substr(0, first);
  const auto second = spec.find(':', first + 1);
  const int r = std::stoi(spec.substr(first + 1, second - first - 1));
  if (r < 0) throw std::invalid_argument("basis order must be non-negative");
  if (kind == "bernoulli" && second == std::string::npos) return Basis::higher_order_bernoulli(r);
  if (kind == "frobenius" && second != std::string::npos)
    return Basis::frobenius_euler(r, Rational::parse(spec.substr(second + 1)));
  throw std::invalid_argument("unknown basis \"" + spec + "\"");
}

py::dict verify_suite(int n_max, int k_min, int k_max, int r_max, const std::optional<py::list>& lambdas,
                      const std::optional<py::list>& y_values, const std::vector<std::string>& identities) {
  verify::GridConfig cfg;
  cfg.n_max = n_max;
  cfg.k_min = k_min;
  cfg.k_max = k_max;
  cfg.r_max = r_max;
  if (lambdas) {
    cfg.lambdas.clear();
    for (const auto& l : *lambdas) cfg.lambdas.push_back(from_py(l));
  }
  if (y_values) {
    cfg.y_values.clear();
    for (const auto& y : *y_values) cfg.y_values.push_back(from_py(y));
  }
  cfg.identities = identities;

  verify::VerificationReport report;
  {
    py::gil_scoped_release release;
    report = verify::run_suite(cfg);
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(verify::to_json(c));
  py::dict out;
  out["passed"] = report.passed();
  out["summary"] = from_json(verify::summary_json(report));
  out["checks"] = from_json(checks);
  return out;
}

}  // namespace

PYBIND11_MODULE(_polycauchy, m) {
  m.doc() = "Exact poly-Cauchy polynomials of the second kind and their identities";

  py::register_exception<verify::ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("number", [](int n, int k) { return to_py(number_closed(n, k)); }, py::arg("n"), py::arg("k"),
        "C_n^(k) as a Fraction.");
  m.def("poly", [](int n, int k) { return to_py(poly_closed(n, k)); }, py::arg("n"), py::arg("k"),
        "Coefficients of C_n^(k)(x), lowest degree first.");
  m.def("poly_oracle", [](int n, int k) { return to_py(poly_oracle(n, k)); }, py::arg("n"), py::arg("k"),
        "C_n^(k)(x) extracted from the generating function.");
  m.def("stirling1", [](int n, int l) { return py::int_(py::str(stirling1(n, l).get_str())); }, py::arg("n"),
        py::arg("l"));
  m.def("lif_series", [](int k, std::size_t order) { return to_py(lif_series(k, order)); }, py::arg("k"),
        py::arg("order"));
  m.def("polycauchy_number_gf", [](int k, std::size_t order) { return to_py(polycauchy_number_gf(k, order)); },
        py::arg("k"), py::arg("order"));
  m.def("bernoulli_2nd_poly", [](int n) { return to_py(bernoulli_2nd_poly(n)); }, py::arg("n"));
  m.def("bernoulli_high_order_poly", [](int n, int alpha) { return to_py(bernoulli_high_order_poly(n, alpha)); },
        py::arg("n"), py::arg("alpha"));
  m.def(
      "frobenius_euler_poly",
      [](int n, int r, const py::object& lambda) { return to_py(frobenius_euler_poly(n, r, from_py(lambda))); },
      py::arg("n"), py::arg("r"), py::arg("lam"));
  m.def("narumi_poly", [](int n, int a) { return to_py(narumi_poly(n, a)); }, py::arg("n"), py::arg("a"));
  m.def(
      "expand",
      [](int n, int k, const std::string& basis) {
        const Basis b = parse_basis(basis);
        ConnectionMatrix row;
        switch (b.kind) {
          case BasisKind::FallingFactorial: row = connection_to_falling(n, k); break;
          case BasisKind::HigherOrderBernoulli: row = connection_to_bernoulli(n, k, b.r); break;
          default: row = connection_to_frobenius(n, k, b.r, b.lambda); break;
        }
        return to_py(std::span<const Rational>(row.entries));
      },
      py::arg("n"), py::arg("k"), py::arg("basis"),
      "Connection constants of C_n^(k)(x) in 'falling', 'bernoulli:r' or 'frobenius:r:lambda'.");
  m.def("catalog", [] {
    py::list out;
    for (const auto& d : verify::catalog()) {
      py::dict e;
      e["id"] = d.id;
      e["statement"] = d.statement;
      e["location"] = d.location;
      e["parameters"] = d.parameters;
      out.append(e);
    }
    return out;
  });
  m.def("verify", &verify_suite, py::arg("n_max") = 12, py::arg("k_min") = -3, py::arg("k_max") = 3,
        py::arg("r_max") = 4, py::arg("lambdas") = py::none(), py::arg("y_values") = py::none(),
        py::arg("identities") = std::vector<std::string>{},
        "Run the identity suite; returns {'passed', 'summary', 'checks'}.");
}
