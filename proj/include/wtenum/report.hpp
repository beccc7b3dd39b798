#pragma once

// Machine-readable reports. Counts are decimal strings so that no consumer
// truncates them to 64 bits or to floating point.

#include <string>

#include <nlohmann/json.hpp>

#include "wtenum/distribution.hpp"
#include "wtenum/engine.hpp"
#include "wtenum/error.hpp"
#include "wtenum/hermitian.hpp"

namespace wtenum {

// {q, m, family, n, k, d, distribution: [[weight, "count"], ...]} by weight.
nlohmann::json to_json(const WeightDistribution& dist);
WeightDistribution distribution_from_json(const nlohmann::json& j);

// "weight,count\n" then one line per weight.
std::string to_csv(const WeightDistribution& dist);
WeightDistribution distribution_from_csv(const std::string& csv, std::uint64_t q, int m, Family family);

nlohmann::json to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const nlohmann::json& j);

// spectrum: [[eigenvalue, multiplicity], ...] by decreasing |eigenvalue|,
// positive first on ties.
nlohmann::json to_json(const WitnessReport& report);
WitnessReport witness_report_from_json(const nlohmann::json& j);

nlohmann::json refusal_json(const BudgetExceeded& e);

}  // namespace wtenum
