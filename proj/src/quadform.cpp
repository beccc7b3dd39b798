#include "wtenum/quadform.hpp"

#include <algorithm>
#include <string>

#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {

QuadForm::QuadForm(std::shared_ptr<const FieldCtx> field, std::optional<Elem> delta0,
                   std::vector<Elem> lambdas)
    : field_(std::move(field)),
      delta0_(delta0),
      lambdas_(std::move(lambdas)),
      cache_(std::make_shared<Cache>()) {
  const FieldCtx& F = *field_;
  const int m = F.m();
  if (static_cast<int>(lambdas_.size()) != m / 2) {
    throw DomainError("expected " + std::to_string(m / 2) + " coefficients lambda_j");
  }
  if ((m % 2 == 1) != delta0_.has_value()) {
    throw DomainError(m % 2 == 1 ? "odd m needs delta_0" : "delta_0 is only used for odd m");
  }
  if (delta0_ && !F.in_subfield(*delta0_, m)) throw DomainError("delta_0 is not in F_{q^m}");
  for (int j = 1; j <= m / 2; ++j) exponents_.push_back(ipow(F.q(), static_cast<unsigned>(2 * j - 1)) + 1);
  delta0_exponent_ = ipow(F.q(), static_cast<unsigned>(m)) + 1;
}

std::uint64_t QuadForm::space_size(const FieldCtx& F) {
  return ipow(F.q(), static_cast<unsigned>(F.m() * F.m()));
}

std::vector<Elem> QuadForm::delta0_domain(const FieldCtx& F) {
  if (F.m() % 2 == 0) return {};
  return F.subfield_elements(F.m());
}

QuadForm QuadForm::from_index(std::shared_ptr<const FieldCtx> field, std::uint64_t index) {
  const FieldCtx& F = *field;
  if (index >= space_size(F)) throw DomainError("form index out of range");
  std::optional<Elem> delta0;
  if (F.m() % 2 == 1) {
    const auto domain = delta0_domain(F);
    delta0 = domain[index % domain.size()];
    index /= domain.size();
  }
  std::vector<Elem> lambdas;
  for (int j = 0; j < F.m() / 2; ++j) {
    lambdas.push_back(Elem{static_cast<std::uint32_t>(index % F.order())});
    index /= F.order();
  }
  return QuadForm(std::move(field), delta0, std::move(lambdas));
}

bool QuadForm::is_zero() const {
  if (delta0_ && delta0_->code != 0) return false;
  return std::all_of(lambdas_.begin(), lambdas_.end(), [](Elem l) { return l.code == 0; });
}

std::uint32_t QuadForm::eval_label(Elem x) const {
  const FieldCtx& F = *field_;
  const SmallField& fq = F.fq();
  if (x.code == 0) return 0;
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j < lambdas_.size(); ++j) {
    if (lambdas_[j].code == 0) continue;
    acc = fq.add(acc, F.trace_label(F.mul(lambdas_[j], F.pow(x, exponents_[j]))));
  }
  if (delta0_ && delta0_->code != 0) {
    acc = fq.add(acc, F.trace_m_label(F.mul(*delta0_, F.pow(x, delta0_exponent_))));
  }
  return acc;
}

std::uint32_t QuadForm::polar_label(Elem x, Elem y) const {
  const SmallField& fq = field_->fq();
  return fq.sub(fq.sub(eval_label(field_->add(x, y)), eval_label(x)), eval_label(y));
}

std::vector<std::uint16_t> QuadForm::value_sequence() const {
  const FieldCtx& F = *field_;
  std::vector<std::uint16_t> out(F.n());
  for (std::uint64_t i = 0; i < F.n(); ++i) out[i] = static_cast<std::uint16_t>(eval_label(F.exp(i)));
  return out;
}

int QuadForm::rank() const {
  std::call_once(cache_->rank_once, [&] {
    auto g = gram_matrix(*this);
    cache_->rank = matrix_rank(g, field_->s(), field_->fq());
  });
  return cache_->rank;
}

int QuadForm::epsilon() const {
  std::call_once(cache_->epsilon_once, [&] {
    if (rank() == 0) {
      cache_->epsilon = 1;
      return;
    }
    const std::int64_t t = big_T(*this);
    if (t == 0) throw ConsistencyError("T_Q vanishes for a form of even rank");
    cache_->epsilon = t > 0 ? 1 : -1;
  });
  return cache_->epsilon;
}

// ---------------------------------------------------------------------------

Elem eval_form(const QuadForm& f, Elem x) { return f.field().fq().to_big(f.eval_label(x)); }

int rank(const QuadForm& f) { return f.rank(); }

int epsilon(const QuadForm& f) { return f.epsilon(); }

std::vector<std::uint32_t> gram_matrix(const QuadForm& f) {
  const FieldCtx& F = f.field();
  const int s = F.s();
  std::vector<Elem> basis(static_cast<std::size_t>(s));
  for (int a = 0; a < s; ++a) basis[static_cast<std::size_t>(a)] = F.exp(static_cast<std::uint64_t>(a));
  std::vector<std::uint32_t> g(static_cast<std::size_t>(s * s));
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      g[static_cast<std::size_t>(a * s + b)] =
          f.polar_label(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
    }
  }
  return g;
}

int matrix_rank(std::vector<std::uint32_t>& g, int dim, const SmallField& fq) {
  int rank = 0;
  const auto at = [&](int r, int c) -> std::uint32_t& { return g[static_cast<std::size_t>(r * dim + c)]; };
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < dim; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const std::uint32_t inv = fq.inv(at(rank, col));
    for (int r = rank + 1; r < dim; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint32_t factor = fq.mul(at(r, col), inv);
      for (int c = col; c < dim; ++c) at(r, c) = fq.sub(at(r, c), fq.mul(factor, at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

std::int64_t contract_roots_of_unity(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) throw DomainError("need at least two residue classes");
  for (std::size_t v = 2; v < counts.size(); ++v) {
    if (counts[v] != counts[1]) {
      throw ConsistencyError("character sum is not a rational integer");
    }
  }
  return static_cast<std::int64_t>(counts[0]) - static_cast<std::int64_t>(counts[1]);
}

namespace {

void check_budget(std::uint64_t work, std::uint64_t budget, const char* what) {
  if (work > budget) throw BudgetExceeded(what, work, budget);
}

// Histogram of Q + Tr(beta x) from precomputed Q(pi^i) and Tr(pi^i) sequences.
std::vector<std::uint64_t> counts_from_sequences(const FieldCtx& F, std::span<const std::uint16_t> qv,
                                                 std::span<const std::uint16_t> tr, Elem beta) {
  const SmallField& fq = F.fq();
  const std::uint64_t n = F.n();
  std::vector<std::uint64_t> counts(fq.size(), 0);
  counts[0] += 1;  // x = 0
  if (beta.code == 0) {
    for (std::uint64_t i = 0; i < n; ++i) ++counts[qv[i]];
    return counts;
  }
  std::uint64_t k = F.log(beta);
  for (std::uint64_t i = 0; i < n; ++i) {
    ++counts[fq.add(qv[i], tr[k])];
    if (++k == n) k = 0;
  }
  return counts;
}

std::int64_t signed_pow(std::uint64_t q, int s) { return static_cast<std::int64_t>(ipow(q, static_cast<unsigned>(s))); }

}  // namespace

std::int64_t big_T(const QuadForm& f, std::uint64_t budget) {
  const FieldCtx& F = f.field();
  check_budget(F.order(), budget, "T_Q sweep");
  std::vector<std::uint64_t> residues(F.p(), 0);
  residues[0] += 1;  // x = 0
  for (std::uint16_t v : f.value_sequence()) ++residues[F.fq().trace_p(v)];
  return contract_roots_of_unity(residues);
}

std::vector<std::uint64_t> value_counts(const QuadForm& f, Elem beta, std::uint64_t budget) {
  const FieldCtx& F = f.field();
  check_budget(F.order(), budget, "solution count sweep");
  const auto qv = f.value_sequence();
  const auto tr = F.trace_sequence();
  return counts_from_sequences(F, qv, tr, beta);
}

std::uint64_t count_solutions(const QuadForm& f, Elem beta, Elem zeta, std::uint64_t budget) {
  const std::uint32_t label = f.field().fq().from_big(zeta);
  return value_counts(f, beta, budget)[label];
}

SumHistogram s_histogram(const QuadForm& f, std::uint64_t budget) {
  const FieldCtx& F = f.field();
  check_budget(F.order() * F.order(), budget, "S_Q histogram");
  const auto qv = f.value_sequence();
  const auto tr = F.trace_sequence();
  const std::int64_t q = static_cast<std::int64_t>(F.q());
  const std::int64_t qs = signed_pow(F.q(), F.s());
  SumHistogram out;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const auto counts = counts_from_sequences(F, qv, tr, Elem{static_cast<std::uint32_t>(c)});
    out[q * static_cast<std::int64_t>(counts[0]) - qs] += 1;
  }
  return out;
}

SumHistogram r_histogram(const QuadForm& f, Elem b, std::uint64_t budget) {
  const FieldCtx& F = f.field();
  if (b.code == 0) throw DomainError("r_histogram needs b != 0; use s_histogram");
  const std::uint32_t target = F.fq().neg(F.fq().from_big(b));
  check_budget(F.order() * F.order(), budget, "R_Q histogram");
  const auto qv = f.value_sequence();
  const auto tr = F.trace_sequence();
  const std::int64_t q = static_cast<std::int64_t>(F.q());
  const std::int64_t qs = signed_pow(F.q(), F.s());
  SumHistogram out;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    const auto counts = counts_from_sequences(F, qv, tr, Elem{static_cast<std::uint32_t>(c)});
    out[q * static_cast<std::int64_t>(counts[target]) - qs] += 1;
  }
  return out;
}

}  // namespace wtenum
