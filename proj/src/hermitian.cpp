#include "wtenum/hermitian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {

namespace {

void check_budget(const FieldCtx& F, std::uint64_t budget) {
  const auto size = checked_pow(F.q(), static_cast<unsigned>(F.m() * F.m()));
  if (!size || *size > budget) {
    throw BudgetExceeded("Hermitian enumeration", size.value_or(UINT64_MAX), budget);
  }
}

std::uint64_t expected_rank1(const FieldCtx& F) { return (F.order() - 1) / (F.q() + 1); }

// F_p-basis of the Hermitian set: E_ii * b for b in a basis of F_q, and
// E_ik * c + E_ki * c^q for c in a basis of F_{q^2}.
std::vector<HermitianMatrix> additive_generators(const FieldCtx& F) {
  const int m = F.m();
  const SmallField& fq = F.fq();
  std::vector<Elem> fq_basis;
  for (int i = 0; i < F.e(); ++i) fq_basis.push_back(fq.to_big(ipow(F.p(), static_cast<unsigned>(i))));
  Elem gamma{};
  for (Elem x : F.subfield_elements(2)) {
    if (!F.in_subfield(x, 1)) {
      gamma = x;
      break;
    }
  }
  std::vector<Elem> fq2_basis = fq_basis;
  for (Elem b : fq_basis) fq2_basis.push_back(F.mul(b, gamma));

  std::vector<HermitianMatrix> gens;
  const HermitianMatrix zero{m, std::vector<Elem>(static_cast<std::size_t>(m * m))};
  for (int i = 0; i < m; ++i) {
    for (Elem b : fq_basis) {
      HermitianMatrix g = zero;
      g.entries[static_cast<std::size_t>(i * m + i)] = b;
      gens.push_back(g);
    }
    for (int k = i + 1; k < m; ++k) {
      for (Elem c : fq2_basis) {
        HermitianMatrix g = zero;
        g.entries[static_cast<std::size_t>(i * m + k)] = c;
        g.entries[static_cast<std::size_t>(k * m + i)] = F.frobenius(c);
        gens.push_back(g);
      }
    }
  }
  return gens;
}

std::vector<std::uint64_t> image_exponents(const FieldCtx& F) {
  std::vector<std::uint64_t> a;
  if (F.m() % 2 == 1) a.push_back(ipow(F.q(), static_cast<unsigned>(F.m())));
  for (int i = 1; i <= F.m() / 2; ++i) a.push_back(ipow(F.q(), static_cast<unsigned>(2 * i - 1)));
  return a;
}

std::vector<std::uint32_t> codes(const std::vector<Elem>& v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (Elem x : v) out.push_back(x.code);
  return out;
}

}  // namespace

std::shared_ptr<const FieldCtx> witness_field(std::uint64_t q, int m) {
  const auto pe = prime_power(q);
  if (!pe) throw DomainError(std::to_string(q) + " is not a prime power");
  if (m < 1) throw DomainError("m must be at least 1");
  return make_field(pe->first, pe->second, 2 * m);
}

std::vector<HermitianMatrix> enumerate_hermitian(const FieldCtx& F, std::uint64_t budget) {
  check_budget(F, budget);
  const int m = F.m();
  const std::vector<Elem> fq = F.subfield_elements(1);
  const std::vector<Elem> fq2 = F.subfield_elements(2);

  // Free positions: diagonal first, then the strict upper triangle.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < m; ++i) slots.emplace_back(i, i);
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; ++k) slots.emplace_back(i, k);
  }

  std::vector<std::size_t> digit(slots.size(), 0);
  std::vector<HermitianMatrix> out;
  HermitianMatrix h{m, std::vector<Elem>(static_cast<std::size_t>(m * m))};
  while (true) {
    for (std::size_t t = 0; t < slots.size(); ++t) {
      const auto [i, k] = slots[t];
      const Elem v = (i == k) ? fq[digit[t]] : fq2[digit[t]];
      h.entries[static_cast<std::size_t>(i * m + k)] = v;
      if (i != k) h.entries[static_cast<std::size_t>(k * m + i)] = F.frobenius(v);
    }
    out.push_back(h);
    std::size_t t = 0;
    for (; t < slots.size(); ++t) {
      const std::size_t radix = (slots[t].first == slots[t].second) ? fq.size() : fq2.size();
      if (++digit[t] < radix) break;
      digit[t] = 0;
    }
    if (t == slots.size()) break;
  }
  return out;
}

std::vector<HermitianMatrix> enumerate_hermitian(std::uint64_t q, int m, std::uint64_t budget) {
  return enumerate_hermitian(*witness_field(q, m), budget);
}

bool is_hermitian(const FieldCtx& F, const HermitianMatrix& h) {
  for (int i = 0; i < h.m; ++i) {
    for (int k = 0; k < h.m; ++k) {
      if (!F.in_subfield(h.at(i, k), 2)) return false;
      if (h.at(k, i) != F.frobenius(h.at(i, k))) return false;
    }
  }
  return true;
}

int matrix_rank_over_qsquared(const FieldCtx& F, const HermitianMatrix& h) {
  const int m = h.m;
  std::vector<Elem> a = h.entries;
  const auto at = [&](int r, int c) -> Elem& { return a[static_cast<std::size_t>(r * m + c)]; };
  int rank = 0;
  for (int col = 0; col < m && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (at(r, col).code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < m; ++c) std::swap(at(pivot, c), at(rank, c));
    const Elem inv = F.inv(at(rank, col));
    for (int r = rank + 1; r < m; ++r) {
      if (at(r, col).code == 0) continue;
      const Elem factor = F.mul(at(r, col), inv);
      for (int c = col; c < m; ++c) at(r, c) = F.sub(at(r, c), F.mul(factor, at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

HermitianMatrix add(const FieldCtx& F, const HermitianMatrix& a, const HermitianMatrix& b) {
  HermitianMatrix out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = F.add(a.entries[i], b.entries[i]);
  return out;
}

std::uint32_t hermitian_pairing(const FieldCtx& F, const HermitianMatrix& a, const HermitianMatrix& h) {
  Elem tr{};
  for (int i = 0; i < a.m; ++i) {
    for (int k = 0; k < a.m; ++k) tr = F.add(tr, F.mul(a.at(i, k), h.at(k, i)));
  }
  return F.fq().trace_p(F.fq().from_big(tr));
}

std::uint64_t rank1_count(std::uint64_t q, int m, std::uint64_t budget) {
  const auto field = witness_field(q, m);
  std::uint64_t count = 0;
  for (const auto& h : enumerate_hermitian(*field, budget)) {
    if (matrix_rank_over_qsquared(*field, h) == 1) ++count;
  }
  if (count != expected_rank1(*field)) {
    throw ConsistencyError("rank-1 count " + std::to_string(count) + " differs from (q^(2m)-1)/(q+1)");
  }
  return count;
}

SumHistogram cayley_spectrum(std::uint64_t q, int m, std::uint64_t budget) {
  const auto field = witness_field(q, m);
  const FieldCtx& F = *field;
  const auto all = enumerate_hermitian(F, budget);
  std::vector<HermitianMatrix> rank1;
  for (const auto& h : all) {
    if (matrix_rank_over_qsquared(F, h) == 1) rank1.push_back(h);
  }
  const auto work = all.size() * rank1.size();
  constexpr std::uint64_t kSpectrumBudget = std::uint64_t{1} << 32;
  if (work > kSpectrumBudget) throw BudgetExceeded("Cayley spectrum", work, kSpectrumBudget);

  SumHistogram spectrum;
  std::vector<std::uint64_t> residues(F.p());
  for (const auto& a : all) {
    std::fill(residues.begin(), residues.end(), 0);
    for (const auto& k : rank1) ++residues[hermitian_pairing(F, a, k)];
    spectrum[contract_roots_of_unity(residues)] += 1;
  }
  return spectrum;
}

std::vector<Elem> isomorphism_image(const FieldCtx& F, const HermitianMatrix& h) {
  const int m = h.m;
  std::vector<Elem> alpha;
  for (int j = 0; j < m; ++j) alpha.push_back(F.exp(static_cast<std::uint64_t>(j)));
  std::vector<Elem> out;
  for (std::uint64_t a : image_exponents(F)) {
    Elem acc{};
    for (int j = 0; j < m; ++j) {
      const Elem left = F.pow(alpha[static_cast<std::size_t>(j)], a);
      for (int k = 0; k < m; ++k) {
        acc = F.add(acc, F.mul(left, F.mul(h.at(j, k), alpha[static_cast<std::size_t>(k)])));
      }
    }
    out.push_back(acc);
  }
  return out;
}

IsomorphismReport verify_isomorphism(std::uint64_t q, int m, std::uint64_t budget) {
  const auto field = witness_field(q, m);
  const FieldCtx& F = *field;
  const auto all = enumerate_hermitian(F, budget);
  IsomorphismReport report;

  std::vector<std::vector<Elem>> images;
  images.reserve(all.size());
  for (const auto& h : all) images.push_back(isomorphism_image(F, h));

  report.lands_in_group = true;
  if (m % 2 == 1) {
    for (const auto& img : images) {
      if (!F.in_subfield(img.front(), m)) {
        report.lands_in_group = false;
        report.detail += "image coordinate outside F_{q^m}; ";
        break;
      }
    }
  }

  report.additive = true;
  const auto gens = additive_generators(F);
  for (const auto& h : all) {
    const auto fh = isomorphism_image(F, h);
    for (const auto& g : gens) {
      const auto lhs = isomorphism_image(F, add(F, h, g));
      const auto fg = isomorphism_image(F, g);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != F.add(fh[i], fg[i])) report.additive = false;
      }
    }
    if (!report.additive) {
      report.detail += "map is not additive; ";
      break;
    }
  }

  std::set<std::vector<std::uint32_t>> distinct;
  for (const auto& img : images) distinct.insert(codes(img));
  report.injective = distinct.size() == all.size();
  if (!report.injective) report.detail += "map is not injective; ";

  std::set<std::vector<std::uint32_t>> connection;
  const auto exps = [&] {
    std::vector<std::uint64_t> e;
    for (std::uint64_t a : image_exponents(F)) e.push_back(a + 1);
    return e;
  }();
  for (std::uint64_t i = 0; i < F.n(); ++i) {
    std::vector<std::uint32_t> tuple;
    for (std::uint64_t e : exps) tuple.push_back(F.pow(F.exp(i), e).code);
    connection.insert(tuple);
  }
  std::set<std::vector<std::uint32_t>> rank1_images;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (matrix_rank_over_qsquared(F, all[i]) == 1) rank1_images.insert(codes(images[i]));
  }
  report.rank1_onto_connection_set = rank1_images == connection;
  if (!report.rank1_onto_connection_set) report.detail += "f(K) differs from the connection set; ";
  report.connection_set_size = connection.size();
  report.connection_set_size_ok = connection.size() == expected_rank1(F);
  if (!report.connection_set_size_ok) report.detail += "connection set has the wrong size; ";
  return report;
}

WitnessReport run_witness(std::uint64_t q, int m, std::uint64_t budget) {
  WitnessReport r;
  r.q = q;
  r.m = m;
  r.hermitian_count = enumerate_hermitian(q, m, budget).size();
  r.rank1_count = rank1_count(q, m, budget);
  r.spectrum = cayley_spectrum(q, m, budget);
  r.isomorphism_ok = verify_isomorphism(q, m, budget).ok();
  return r;
}

}  // namespace wtenum
