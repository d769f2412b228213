#include "polycauchy/report.hpp"

#include <iomanip>
#include <sstream>

namespace polycauchy::verify {

Json to_json(const Check& check) {
  Json params = Json::object();
  for (const auto& p : check.params) params[p.name] = p.value.to_string();
  Json j;
  j["identity"] = check.identity;
  j["params"] = std::move(params);
  j["status"] = check.pass ? "pass" : "fail";
  j["sides"] = check.sides;
  return j;
}

Json to_json(const GridConfig& config) {
  Json j;
  j["n_max"] = config.n_max;
  j["k_min"] = config.k_min;
  j["k_max"] = config.k_max;
  j["r_min"] = config.r_min;
  j["r_max"] = config.r_max;
  Json lambdas = Json::array();
  for (const auto& l : config.lambdas) lambdas.push_back(l.to_string());
  j["lambdas"] = std::move(lambdas);
  Json ys = Json::array();
  for (const auto& y : config.y_values) ys.push_back(y.to_string());
  j["y_values"] = std::move(ys);
  j["lif_order"] = config.lif_order;
  j["identities"] = config.identities;
  return j;
}

Json summary_json(const VerificationReport& report) {
  Json per = Json::array();
  for (const auto& [id, total, failed] : report.per_identity()) {
    per.push_back(Json{{"id", id}, {"checks", total}, {"failures", failed}});
  }
  Json j;
  j["checks"] = report.checks.size();
  j["failures"] = report.failures();
  j["identities"] = std::move(per);
  return j;
}

std::string summary_text(const VerificationReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "identity" << std::right << std::setw(8) << "checks" << std::setw(10)
     << "failures" << "\n";
  for (const auto& [id, total, failed] : report.per_identity()) {
    os << std::left << std::setw(24) << id << std::right << std::setw(8) << total << std::setw(10) << failed << "\n";
  }
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    os << "FAIL " << c.identity;
    for (const auto& p : c.params) os << " " << p.name << "=" << p.value;
    os << "\n";
    for (std::size_t i = 0; i < c.sides.size(); ++i) os << "  side " << i << ": " << c.sides[i] << "\n";
  }
  os << "checks: " << report.checks.size() << ", failures: " << report.failures() << "\n";
  return os.str();
}

}  // namespace polycauchy::verify
