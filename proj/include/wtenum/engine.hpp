#pragma once

// Independent oracles for the weight distributions: exhaustive enumeration
// of codewords, and a rank sweep that measures the rank of every quadratic
// form and expands the per-rank beta-histograms.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "wtenum/code.hpp"
#include "wtenum/distribution.hpp"
#include "wtenum/spectra.hpp"

namespace wtenum {

inline constexpr std::uint64_t kDefaultEngineBudget = std::uint64_t{1} << 36;

enum class Kernel {
  kAuto,      // bitplanes for q <= 16, otherwise direct
  kBitplane,  // one-hot bit vectors per F_q value, popcount of ANDs
  kDirect,    // per-coordinate label histogram
};

struct EngineOptions {
  std::uint64_t budget = kDefaultEngineBudget;
  // 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
  Kernel kernel = Kernel::kAuto;
  // Called with 1..100 as the share of processed forms crosses each percent,
  // in increasing order, from whichever worker crossed it.
  std::function<void(int)> progress;
};

enum class Tier { kQuick, kStandard, kExtended };

std::uint64_t tier_budget(Tier tier);
std::string_view tier_name(Tier tier);
std::optional<Tier> parse_tier(std::string_view name);

enum class OracleKind { kBrute, kRankSweep };
std::string_view oracle_name(OracleKind kind);
std::optional<OracleKind> parse_oracle(std::string_view name);

struct OracleResult {
  WeightDistribution distribution;
  // Elementary coordinate evaluations actually performed.
  std::uint64_t work = 0;
  // Measured rank counts (rank_sweep only).
  std::optional<RankDistribution> ranks;
};

// A priori work of each oracle; nullopt when it overflows 64 bits.
std::optional<std::uint64_t> brute_estimate(std::uint64_t q, int m, Family family);
std::optional<std::uint64_t> rank_sweep_estimate(std::uint64_t q, int m, Family family);
std::optional<std::uint64_t> brute_estimate(const CodeSpec& spec);
std::optional<std::uint64_t> rank_sweep_estimate(const CodeSpec& spec);

// Every codeword, via one Q-vector per form and a match count per beta (and
// per shift b for E). Throws BudgetExceeded when the estimate is over budget.
OracleResult brute_distribution(const CodeSpec& spec, const EngineOptions& options = {});

// Ranks of all q^(m^2) forms from their Gram matrices; epsilon taken as
// (-1)^(r/2) and cross-checked against T_Q on a stride sample. Throws
// BudgetExceeded, or ConsistencyError when a check fails.
OracleResult rank_sweep(const CodeSpec& spec, const EngineOptions& options = {});

struct VerifyReport {
  WeightDistribution predicted;
  WeightDistribution oracle;
  OracleKind oracle_kind = OracleKind::kBrute;
  bool equal = false;
  std::optional<std::uint64_t> first_difference;
  double runtime_seconds = 0;
  std::uint64_t work_count = 0;
  std::uint64_t estimate = 0;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// predict vs. brute when affordable, else rank_sweep; `budget` replaces
// options.budget. Throws BudgetExceeded (cheapest estimate) when neither fits.
VerifyReport verify(const CodeSpec& spec, std::uint64_t budget, EngineOptions options = {});
VerifyReport verify(const CodeSpec& spec, Tier tier, EngineOptions options = {});

// Same, starting from the parameters: the budget is checked before the field
// is built, so oversized requests are refused cheaply.
VerifyReport verify(std::uint64_t q, int m, Family family, std::uint64_t budget, EngineOptions options = {},
                    const FieldOptions& field_options = {});

}  // namespace wtenum
