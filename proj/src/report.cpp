#include "wtenum/report.hpp"

#include <algorithm>
#include <sstream>

#include "wtenum/error.hpp"

namespace wtenum {

using nlohmann::json;

namespace {

BigInt parse_count(const json& v) {
  if (!v.is_string()) throw DomainError("counts must be decimal strings");
  const std::string s = v.get<std::string>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed count '" + s + "'");
  }
  return BigInt(s);
}

Family family_from(const json& v) {
  const auto f = parse_family(v.get<std::string>());
  if (!f) throw DomainError("unknown family");
  return *f;
}

}  // namespace

json to_json(const WeightDistribution& dist) {
  json rows = json::array();
  for (const auto& [w, c] : dist.counts) rows.push_back(json::array({w, to_decimal(c)}));
  json j;
  j["q"] = dist.q;
  j["m"] = dist.m;
  j["family"] = std::string(family_name(dist.family));
  j["n"] = dist.length();
  j["k"] = dist.dimension();
  const auto d = dist.min_positive_weight();
  j["d"] = d ? json(*d) : json(nullptr);
  j["distribution"] = std::move(rows);
  return j;
}

WeightDistribution distribution_from_json(const json& j) {
  WeightDistribution dist;
  dist.q = j.at("q").get<std::uint64_t>();
  dist.m = j.at("m").get<int>();
  dist.family = family_from(j.at("family"));
  for (const auto& row : j.at("distribution")) {
    if (!row.is_array() || row.size() != 2) throw DomainError("distribution rows are [weight, count] pairs");
    dist.counts[row[0].get<std::uint64_t>()] = parse_count(row[1]);
  }
  if (j.contains("n") && j.at("n").get<std::uint64_t>() != dist.length()) throw DomainError("n disagrees with q and m");
  if (j.contains("k") && j.at("k").get<int>() != dist.dimension()) throw DomainError("k disagrees with the family");
  return dist;
}

std::string to_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,count\n";
  for (const auto& [w, c] : dist.counts) out << w << ',' << to_decimal(c) << '\n';
  return out.str();
}

WeightDistribution distribution_from_csv(const std::string& csv, std::uint64_t q, int m, Family family) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "weight,count") throw DomainError("missing CSV header");
  WeightDistribution dist{q, m, family, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("malformed CSV row '" + line + "'");
    dist.counts[std::stoull(line.substr(0, comma))] = parse_count(json(line.substr(comma + 1)));
  }
  return dist;
}

json to_json(const VerifyReport& report) {
  json j;
  j["predicted"] = to_json(report.predicted);
  j["oracle"] = to_json(report.oracle);
  j["oracle_kind"] = std::string(oracle_name(report.oracle_kind));
  j["equal"] = report.equal;
  j["first_difference"] = report.first_difference ? json(*report.first_difference) : json(nullptr);
  j["runtime_seconds"] = report.runtime_seconds;
  j["work_count"] = report.work_count;
  j["estimate"] = report.estimate;
  return j;
}

VerifyReport verify_report_from_json(const json& j) {
  VerifyReport r;
  r.predicted = distribution_from_json(j.at("predicted"));
  r.oracle = distribution_from_json(j.at("oracle"));
  const auto kind = parse_oracle(j.at("oracle_kind").get<std::string>());
  if (!kind) throw DomainError("unknown oracle kind");
  r.oracle_kind = *kind;
  r.equal = j.at("equal").get<bool>();
  if (!j.at("first_difference").is_null()) r.first_difference = j.at("first_difference").get<std::uint64_t>();
  r.runtime_seconds = j.at("runtime_seconds").get<double>();
  r.work_count = j.at("work_count").get<std::uint64_t>();
  r.estimate = j.at("estimate").get<std::uint64_t>();
  return r;
}

json to_json(const WitnessReport& report) {
  std::vector<std::pair<std::int64_t, BigInt>> rows(report.spectrum.begin(), report.spectrum.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const auto ma = a.first < 0 ? -a.first : a.first;
    const auto mb = b.first < 0 ? -b.first : b.first;
    return ma != mb ? ma > mb : a.first > b.first;
  });
  json spectrum = json::array();
  for (const auto& [value, mult] : rows) spectrum.push_back(json::array({value, to_decimal(mult)}));
  json j;
  j["q"] = report.q;
  j["m"] = report.m;
  j["hermitian_count"] = report.hermitian_count;
  j["rank1_count"] = report.rank1_count;
  j["spectrum"] = std::move(spectrum);
  j["isomorphism_ok"] = report.isomorphism_ok;
  return j;
}

WitnessReport witness_report_from_json(const json& j) {
  WitnessReport r;
  r.q = j.at("q").get<std::uint64_t>();
  r.m = j.at("m").get<int>();
  r.hermitian_count = j.at("hermitian_count").get<std::uint64_t>();
  r.rank1_count = j.at("rank1_count").get<std::uint64_t>();
  for (const auto& row : j.at("spectrum")) r.spectrum[row.at(0).get<std::int64_t>()] = parse_count(row.at(1));
  r.isomorphism_ok = j.at("isomorphism_ok").get<bool>();
  return r;
}

json refusal_json(const BudgetExceeded& e) {
  json j;
  j["error"] = "budget";
  j["message"] = e.what();
  j["estimate"] = e.estimate();
  j["budget"] = e.budget();
  return j;
}

}  // namespace wtenum
