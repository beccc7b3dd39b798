// Acceptance checks. Prints one PASS/FAIL line per criterion (details for
// failures are indented underneath) and exits non-zero if any criterion fails.
// Every comparison is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "oracles.hpp"
#include "wtenum/code.hpp"
#include "wtenum/engine.hpp"
#include "wtenum/hermitian.hpp"
#include "wtenum/number_theory.hpp"
#include "wtenum/poly.hpp"
#include "wtenum/quadform.hpp"
#include "wtenum/spectra.hpp"

namespace {

using namespace wtenum;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string pm(std::uint64_t q, int m) { return "(" + std::to_string(q) + "," + std::to_string(m) + ")"; }

// ---------------------------------------------------------------------------

struct GoldenRun {
  Tier tier;
  OracleKind oracle;
  double limit_seconds;
};

GoldenRun golden_run(const testing::Golden& g) {
  if (g.q == 3 && g.m == 2) return {Tier::kQuick, OracleKind::kBrute, 1};
  if (g.q == 4 && g.m == 2) return {Tier::kQuick, OracleKind::kBrute, 5};
  if (g.q == 2 && g.m == 4 && g.family == Family::kC) return {Tier::kQuick, OracleKind::kBrute, 30};
  if (g.q == 2 && g.m == 4 && g.family == Family::kD) return {Tier::kStandard, OracleKind::kBrute, 600};
  if (g.q == 2 && g.m == 4) return {Tier::kExtended, OracleKind::kBrute, 600};
  if (g.q == 4 && g.m == 3) return {Tier::kStandard, OracleKind::kBrute, 120};
  if (g.q == 3 && g.m == 3) return {Tier::kExtended, OracleKind::kBrute, 3600};
  return {Tier::kExtended, OracleKind::kRankSweep, 3600};
}

void golden_enumerators(Check& c) {
  for (const auto& g : testing::golden_enumerators()) {
    const GoldenRun run = golden_run(g);
    try {
      const auto report = verify(g.q, g.m, g.family, tier_budget(run.tier));
      const auto expected = g.distribution();
      std::ostringstream line;
      line << g.label() << " " << oracle_name(report.oracle_kind) << " " << report.runtime_seconds << "s";
      c.notes.push_back(line.str());
      c.expect(report.equal, g.label() + ": prediction differs from the oracle");
      c.expect(report.oracle == expected, g.label() + ": oracle differs from the published enumerator");
      c.expect(report.predicted == expected, g.label() + ": prediction differs from the published enumerator");
      c.expect(report.oracle.min_positive_weight() == g.d, g.label() + ": minimum distance");
      c.expect(report.oracle_kind == run.oracle, g.label() + ": unexpected oracle");
      c.expect(report.runtime_seconds < run.limit_seconds, g.label() + ": over the time limit");
    } catch (const std::exception& e) {
      c.expect(false, g.label() + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------

void rank_distributions(Check& c) {
  for (auto [p, e, m] : std::vector<std::tuple<std::uint32_t, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}}) {
    const auto F = make_field(p, e, 2 * m);
    std::map<int, BigInt> measured;
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) {
      const int r = testing::naive_rank(QuadForm::from_index(F, i));
      c.expect(r % 2 == 0, pm(F->q(), m) + ": odd rank");
      measured[r / 2] += 1;
    }
    c.expect(measured == frequencies(F->q(), m).counts, pm(F->q(), m) + ": rank counts differ from f_j");
  }
}

// ---------------------------------------------------------------------------

void check_form(Check& c, const QuadForm& f, const std::string& where) {
  const FieldCtx& F = f.field();
  const int r = f.rank();
  const int eps = f.epsilon();
  const std::int64_t t = big_T(f);
  bool allowed = false;
  for (int j = 0; j <= F.m(); ++j) {
    const std::int64_t v = static_cast<std::int64_t>(ipow(F.q(), static_cast<unsigned>(F.s() - j)));
    allowed = allowed || t == (j % 2 == 0 ? v : -v);
  }
  c.expect(allowed, where + ": T_Q = " + std::to_string(t));
  c.expect(s_histogram(f) == testing::expected_s_rows(F.q(), F.s(), r, eps), where + ": S histogram");
  for (std::uint32_t b = 1; b < F.q(); ++b) {
    c.expect(r_histogram(f, F.fq().to_big(b)) == testing::expected_r_rows(F.q(), F.s(), r, eps),
             where + ": R histogram, b label " + std::to_string(b));
  }
}

void exponential_sums(Check& c) {
  std::uint64_t forms = 0;
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto F = make_field(p, 1, 2 * m);
    for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) {
      check_form(c, QuadForm::from_index(F, i), pm(p, m) + " form " + std::to_string(i));
      ++forms;
    }
  }
  // Every one of the 256 forms at (4,2), which covers the sample requirement.
  const auto F = make_field(2, 2, 4);
  for (std::uint64_t i = 0; i < QuadForm::space_size(*F); ++i) {
    check_form(c, QuadForm::from_index(F, i), "(4,2) form " + std::to_string(i));
    ++forms;
  }
  c.notes.push_back(std::to_string(forms) + " forms");
}

// ---------------------------------------------------------------------------

void hermitian_witness(Check& c) {
  const auto start = Clock::now();
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    try {
      const auto r = run_witness(q, m);
      c.expect(r.hermitian_count == ipow(q, static_cast<unsigned>(m * m)), pm(q, m) + ": |H|");
      c.expect(r.rank1_count == (ipow(q, static_cast<unsigned>(2 * m)) - 1) / (q + 1), pm(q, m) + ": rank-1 count");
      SumHistogram expected;
      const auto xi = eigenvalues(q, m);
      for (const auto& [j, fj] : frequencies(q, m).counts) {
        expected[static_cast<std::int64_t>(xi[static_cast<std::size_t>(j)])] += fj;
      }
      c.expect(r.spectrum == expected, pm(q, m) + ": spectrum");
      const auto iso = verify_isomorphism(q, m);
      c.expect(iso.ok(), pm(q, m) + ": isomorphism " + iso.detail);
    } catch (const std::exception& e) {
      c.expect(false, pm(q, m) + ": " + e.what());
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 60, "took " + std::to_string(elapsed) + "s");
}

// ---------------------------------------------------------------------------

CodeParams random_params(const CodeSpec& spec, std::mt19937_64& rng) {
  const FieldCtx& F = *spec.field;
  const auto any = [&] { return Elem{static_cast<std::uint32_t>(rng() % F.order())}; };
  CodeParams p;
  if (spec.params.beta) p.beta = any();
  if (spec.params.delta0) {
    const auto dom = F.subfield_elements(spec.m);
    p.delta0 = dom[rng() % dom.size()];
  }
  for (int j = 0; j < spec.params.lambdas; ++j) p.lambdas.push_back(any());
  if (spec.params.constant) p.constant = F.fq().to_big(static_cast<std::uint32_t>(rng() % F.q()));
  return p;
}

bool degenerate(std::uint64_t q, int m, Family f) { return q == 2 && m == 1 && f == Family::kE; }

void structure(Check& c) {
  // Dimensions of the constructed codes, predicted totals and minimum distances.
  int codes = 0;
  for (std::uint64_t q = 2; q * q <= (1u << 20); ++q) {
    const auto pe = prime_power(q);
    if (!pe) continue;
    for (int m = 1; ipow(q, static_cast<unsigned>(2 * m)) <= (1u << 20); ++m) {
      const auto F = make_field(pe->first, pe->second, 2 * m);
      for (Family fam : {Family::kC, Family::kD, Family::kE}) {
        if (degenerate(q, m, fam)) continue;
        const std::string where = std::string(family_name(fam)) + pm(q, m);
        try {
          const auto spec = build_code(F, fam);
          const int k = family_dimension(fam, m);
          c.expect(spec.k == k && spec.parity_check.degree() == k, where + ": dimension");
          c.expect(divides_x_pow_minus_one(*F, spec.parity_check, spec.n), where + ": h does not divide X^n - 1");
          const auto w = predict(q, m, fam);
          c.expect(w.total() == big_pow(static_cast<std::int64_t>(q), static_cast<unsigned>(k)), where + ": total");
          if (const auto d = closed_form_min_distance(q, m, fam)) c.expect(w.min_positive_weight() == *d, where + ": d");
          ++codes;
        } catch (const std::exception& e) {
          c.expect(false, where + ": " + e.what());
        }
      }
    }
  }
  c.notes.push_back(std::to_string(codes) + " codes");

  // C inside D inside E on sampled codewords.
  std::mt19937_64 rng(2024);
  for (auto [p, e, m] : std::vector<std::tuple<std::uint32_t, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 3}, {2, 1, 4}, {5, 1, 2}}) {
    const auto F = make_field(p, e, 2 * m);
    const CodeSpec C = build_code(F, Family::kC);
    const CodeSpec D = build_code(F, Family::kD);
    const CodeSpec E = build_code(F, Family::kE);
    for (int i = 0; i < 20; ++i) {
      const auto wc = codeword(C, random_params(C, rng)).values;
      const auto wd = codeword(D, random_params(D, rng)).values;
      const std::string where = pm(F->q(), m);
      c.expect(annihilated_by(*F, D.parity_check, wc) && annihilated_by(*F, E.parity_check, wc), where + ": C word outside D or E");
      c.expect(annihilated_by(*F, E.parity_check, wd), where + ": D word outside E");
    }
  }

  // Moments of the spectrum.
  for (std::uint64_t q = 2; q <= 9; ++q) {
    if (!prime_power(q)) continue;
    for (int m = 1; m <= 6; ++m) {
      const auto xi = eigenvalues(q, m);
      const BigInt degree = (big_pow(static_cast<std::int64_t>(q), static_cast<unsigned>(2 * m)) - 1) / (q + 1);
      BigInt first = 0;
      BigInt second = 0;
      for (const auto& [j, fj] : frequencies(q, m).counts) {
        first += fj * xi[static_cast<std::size_t>(j)];
        second += fj * xi[static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j)];
      }
      c.expect(first == 0, pm(q, m) + ": sum f xi");
      c.expect(second == big_pow(static_cast<std::int64_t>(q), static_cast<unsigned>(m * m)) * degree, pm(q, m) + ": sum f xi^2");
    }
  }
}

// ---------------------------------------------------------------------------

void determinism(Check& c) {
  for (Family fam : {Family::kC, Family::kD, Family::kE}) {
    std::optional<WeightDistribution> reference;
    for (std::size_t modulus_rank : {0u, 1u}) {
      FieldOptions fo;
      fo.modulus_rank = modulus_rank;
      const auto spec = build_code(make_field(3, 1, 4, fo), fam);
      for (unsigned workers : {1u, 4u, 8u}) {
        EngineOptions eo;
        eo.workers = workers;
        const auto got = brute_distribution(spec, eo).distribution;
        if (!reference) reference = got;
        c.expect(got == *reference, std::string(family_name(fam)) + "(3,2): differs at modulus rank " +
                                        std::to_string(modulus_rank) + ", " + std::to_string(workers) + " workers");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 golden enumerators reproduced by verify", golden_enumerators},
      {"2 rank counts equal f_j", rank_distributions},
      {"3 exponential sums follow the three-row patterns", exponential_sums},
      {"4 Hermitian forms graph witness", hermitian_witness},
      {"5 structural suite", structure},
      {"6 determinism across workers and moduli", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::ostringstream timing;
    timing.precision(3);
    timing << seconds_since(start);
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << name << " [" << timing.str() << "s]\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    if (!c.failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
