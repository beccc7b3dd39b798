// wtenum: predicted vs. enumerated weight distributions of the C/D/E cyclic
// code families, and the Hermitian forms graph witness.
//
// Exit status: 0 success (verify: distributions equal), 1 internal error or
// mismatch, 2 usage error, 3 refused for budget.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wtenum/engine.hpp"
#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"
#include "wtenum/report.hpp"
#include "wtenum/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<int> e;
  int m = 0;

  std::uint64_t resolve() const {
    std::uint64_t value = 0;
    if (q) {
      if (p || e) throw UsageError("give either --q or --p/--e, not both");
      value = *q;
    } else {
      if (!p) throw UsageError("one of --q or --p is required");
      const auto v = wtenum::checked_pow(*p, static_cast<unsigned>(e.value_or(1)));
      if (!v || e.value_or(1) < 1) throw UsageError("p^e is out of range");
      if (!wtenum::is_prime(*p)) throw UsageError(std::to_string(*p) + " is not prime");
      value = *v;
    }
    if (!wtenum::prime_power(value)) throw UsageError(std::to_string(value) + " is not a prime power");
    if (m < 1) throw UsageError("--m must be at least 1");
    return value;
  }
};

// key=value lines; '#' starts a comment. Only budgets and the worker count.
struct Config {
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> budget_quick;
  std::optional<std::uint64_t> budget_standard;
  std::optional<std::uint64_t> budget_extended;
  std::optional<std::uint64_t> budget_witness;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw UsageError("config key '" + key + "' needs an unsigned integer");
  return v;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "workers") {
      cfg.workers = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "budget.quick") {
      cfg.budget_quick = parse_u64(key, value);
    } else if (key == "budget.standard") {
      cfg.budget_standard = parse_u64(key, value);
    } else if (key == "budget.extended") {
      cfg.budget_extended = parse_u64(key, value);
    } else if (key == "budget.witness") {
      cfg.budget_witness = parse_u64(key, value);
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--q", args.q, "Field size q (a prime power)");
  cmd->add_option("--p", args.p, "Characteristic p, with --e");
  cmd->add_option("--e", args.e, "Extension degree e, q = p^e");
  cmd->add_option("--m", args.m, "Parameter m (codes of length q^(2m) - 1)")->required();
}

wtenum::Family family_or_throw(const std::string& name) {
  const auto f = wtenum::parse_family(name);
  if (!f) throw UsageError("family must be C, D or E");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight distributions of the C/D/E cyclic code families"};
  app.require_subcommand(1);

  FieldArgs field;
  std::string family = "D";
  std::string format = "json";
  std::string tier = "quick";
  std::string out_path;
  std::string config_path;
  unsigned workers = 0;

  auto* predict_cmd = app.add_subcommand("predict", "Closed-form weight distribution");
  add_field_options(predict_cmd, field);
  predict_cmd->add_option("--family", family, "C, D or E")->required();
  predict_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  predict_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Compare the prediction with an enumeration oracle");
  add_field_options(verify_cmd, field);
  verify_cmd->add_option("--family", family, "C, D or E")->required();
  verify_cmd->add_option("--tier", tier, "quick, standard or extended")
      ->check(CLI::IsMember({"quick", "standard", "extended"}));
  verify_cmd->add_option("--workers", workers, "Worker threads (default: all cores)");
  verify_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  verify_cmd->add_option("--config", config_path, "key=value file with budgets and workers");
  verify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* witness_cmd = app.add_subcommand("witness", "Hermitian forms graph witness");
  add_field_options(witness_cmd, field);
  witness_cmd->add_option("--config", config_path, "key=value file with budgets and workers");
  witness_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t q = field.resolve();
    const Config cfg = config_path.empty() ? Config{} : load_config(config_path);

    if (*predict_cmd) {
      const auto dist = wtenum::predict(q, field.m, family_or_throw(family));
      emit(format == "csv" ? wtenum::to_csv(dist) : wtenum::to_json(dist).dump() + "\n", out_path);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto fam = family_or_throw(family);
      const auto t = *wtenum::parse_tier(tier);
      std::uint64_t budget = wtenum::tier_budget(t);
      if (t == wtenum::Tier::kQuick && cfg.budget_quick) budget = *cfg.budget_quick;
      if (t == wtenum::Tier::kStandard && cfg.budget_standard) budget = *cfg.budget_standard;
      if (t == wtenum::Tier::kExtended && cfg.budget_extended) budget = *cfg.budget_extended;
      wtenum::EngineOptions options;
      options.workers = workers ? workers : cfg.workers.value_or(0);
      options.progress = [](int pct) { std::cerr << "progress " << pct << "%\n"; };
      try {
        const auto report = wtenum::verify(q, field.m, fam, budget, options);
        emit(wtenum::to_json(report).dump() + "\n", out_path);
        return report.equal ? kExitOk : kExitFailure;
      } catch (const wtenum::BudgetExceeded& e) {
        emit(wtenum::refusal_json(e).dump() + "\n", out_path);
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
      }
    }

    if (*witness_cmd) {
      const std::uint64_t budget = cfg.budget_witness.value_or(wtenum::kDefaultWitnessBudget);
      try {
        const auto report = wtenum::run_witness(q, field.m, budget);
        emit(wtenum::to_json(report).dump() + "\n", out_path);
        return report.isomorphism_ok ? kExitOk : kExitFailure;
      } catch (const wtenum::BudgetExceeded& e) {
        emit(wtenum::refusal_json(e).dump() + "\n", out_path);
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wtenum::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
