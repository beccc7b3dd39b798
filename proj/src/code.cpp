#include "wtenum/code.hpp"

#include <algorithm>
#include <string>

#include "wtenum/distribution.hpp"
#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kC:
      return "C";
    case Family::kD:
      return "D";
    case Family::kE:
      return "E";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "C" || name == "c") return Family::kC;
  if (name == "D" || name == "d") return Family::kD;
  if (name == "E" || name == "e") return Family::kE;
  return std::nullopt;
}

int family_dimension(Family f, int m) {
  switch (f) {
    case Family::kC:
      return m * m;
    case Family::kD:
      return m * m + 2 * m;
    case Family::kE:
      return m * m + 2 * m + 1;
  }
  return 0;
}

std::uint64_t WeightDistribution::length() const { return ipow(q, static_cast<unsigned>(2 * m)) - 1; }

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [w, c] : counts) sum += c;
  return sum;
}

std::optional<std::uint64_t> WeightDistribution::min_positive_weight() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_difference(const WeightDistribution& a, const WeightDistribution& b) {
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.counts.end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> build_gamma(std::uint64_t q, int m) {
  if (m < 1) throw DomainError("m must be >= 1");
  std::vector<std::uint64_t> gamma{1};
  if (m % 2 == 1) gamma.push_back(ipow(q, static_cast<unsigned>(m)) + 1);
  for (int i = 1; i <= m / 2; ++i) gamma.push_back(ipow(q, static_cast<unsigned>(2 * i - 1)) + 1);
  return gamma;
}

std::vector<std::uint64_t> CodeSpec::lambda_exponents() const {
  std::vector<std::uint64_t> out;
  for (int j = 1; j <= t(); ++j) out.push_back(ipow(q, static_cast<unsigned>(2 * j - 1)) + 1);
  return out;
}

std::uint64_t CodeSpec::delta0_exponent() const { return ipow(q, static_cast<unsigned>(m)) + 1; }

CodeSpec build_code(std::shared_ptr<const FieldCtx> field, Family family) {
  const FieldCtx& F = *field;
  CodeSpec spec;
  spec.family = family;
  spec.q = F.q();
  spec.m = F.m();
  spec.n = F.n();
  spec.k = family_dimension(family, spec.m);
  spec.gamma = build_gamma(spec.q, spec.m);
  spec.params.beta = family != Family::kC;
  spec.params.delta0 = spec.odd();
  spec.params.lambdas = spec.t();
  spec.params.constant = family == Family::kE;

  std::vector<Poly> factors;
  for (std::uint64_t u : spec.gamma) {
    Poly h = minimal_polynomial(F, F.exp((spec.n - u % spec.n) % spec.n));
    if (std::find(factors.begin(), factors.end(), h) != factors.end()) {
      throw ConsistencyError("pi^-" + std::to_string(u) + " is conjugate to another element of Gamma");
    }
    factors.push_back(std::move(h));
  }
  Poly h{F.one()};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (family == Family::kC && spec.gamma[i] == 1) continue;
    h = poly_mul(F, h, factors[i]);
  }
  if (family == Family::kE) h = poly_mul(F, h, Poly{F.neg(F.one()), F.one()});

  if (h.degree() != spec.k) {
    throw ConsistencyError("parity-check degree " + std::to_string(h.degree()) +
                           " differs from the dimension " + std::to_string(spec.k));
  }
  if (!divides_x_pow_minus_one(F, h, spec.n)) {
    throw ConsistencyError("parity-check polynomial does not divide X^n - 1 for " +
                           std::string(family_name(family)) + "_(" + std::to_string(spec.q) + "," +
                           std::to_string(spec.m) + ")");
  }
  spec.parity_check = std::move(h);
  spec.field = std::move(field);
  return spec;
}

Codeword codeword(const CodeSpec& spec, const CodeParams& params) {
  const FieldCtx& F = *spec.field;
  if (params.beta.has_value() != spec.params.beta) {
    throw DomainError(spec.params.beta ? "beta is required" : "family C takes no beta");
  }
  if (params.delta0.has_value() != spec.params.delta0) {
    throw DomainError(spec.params.delta0 ? "delta_0 is required for odd m" : "delta_0 is only used for odd m");
  }
  if (static_cast<int>(params.lambdas.size()) != spec.params.lambdas) {
    throw DomainError("expected " + std::to_string(spec.params.lambdas) + " quadratic coefficients");
  }
  if (params.constant.has_value() != spec.params.constant) {
    throw DomainError(spec.params.constant ? "family E needs the constant b" : "only family E takes a constant");
  }
  if (params.delta0 && !F.in_subfield(*params.delta0, spec.m)) {
    throw DomainError("delta_0 is not in F_{q^m}");
  }
  if (params.constant && !F.in_subfield(*params.constant, 1)) {
    throw DomainError("constant b is not in F_q");
  }

  const auto exps = spec.lambda_exponents();
  Codeword w;
  w.params = params;
  w.values.resize(spec.n);
  Elem x = F.one();
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    Elem acc = F.zero();
    if (params.beta) acc = F.add(acc, F.trace(F.mul(*params.beta, x), TraceLevel::kQsToQ));
    if (params.delta0) {
      const Elem y = F.mul(*params.delta0, F.pow(x, spec.delta0_exponent()));
      acc = F.add(acc, F.trace(y, TraceLevel::kQmToQ));
    }
    for (std::size_t j = 0; j < exps.size(); ++j) {
      acc = F.add(acc, F.trace(F.mul(params.lambdas[j], F.pow(x, exps[j])), TraceLevel::kQsToQ));
    }
    if (params.constant) acc = F.add(acc, *params.constant);
    w.values[i] = acc;
    x = F.mul(x, F.primitive());
  }
  return w;
}

std::uint64_t weight(const Codeword& w) {
  return static_cast<std::uint64_t>(
      std::count_if(w.values.begin(), w.values.end(), [](Elem v) { return v.code != 0; }));
}

bool annihilated_by(const FieldCtx& F, const Poly& h, const std::vector<Elem>& values) {
  const std::size_t n = values.size();
  for (std::size_t j = 0; j < n; ++j) {
    Elem acc = F.zero();
    for (std::size_t l = 0; l < h.coeffs().size(); ++l) {
      const Elem c = h.coeffs()[l];
      if (c.code == 0) continue;
      acc = F.add(acc, F.mul(c, values[(j + n - l % n) % n]));
    }
    if (acc.code != 0) return false;
  }
  return true;
}

}  // namespace wtenum
