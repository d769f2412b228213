#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "polycauchy/verify.hpp"

namespace polycauchy::verify {

using Json = nlohmann::ordered_json;

/// {"identity":..., "params":{name: "num/den"...}, "status":"pass"|"fail", "sides":[...]}
Json to_json(const Check& check);

Json to_json(const GridConfig& config);

/// {"checks": total, "failures": count, "identities": [{"id","checks","failures"}...]}
Json summary_json(const VerificationReport& report);

/// Per-identity table, every failing check with its sides, and a closing
/// "checks: N, failures: F" line.
std::string summary_text(const VerificationReport& report);

}  // namespace polycauchy::verify
