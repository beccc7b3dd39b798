#include "oracles.hpp"

#include <stdexcept>

#include "wtenum/number_theory.hpp"

namespace wtenum::testing {

namespace {

// (a * b) mod f over F_p, all low-to-high.
std::vector<std::uint32_t> mulmod_poly(std::uint32_t p, const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b, const std::vector<std::uint32_t>& f) {
  const std::size_t d = f.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * f[i]) % p;
  }
  std::vector<std::uint32_t> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace

std::uint64_t naive_order_of_x(std::uint32_t p, const std::vector<std::uint32_t>& f) {
  const std::size_t d = f.size() - 1;
  if (f[0] == 0) return 0;
  std::vector<std::uint32_t> x(d, 0), one(d, 0), cur(d, 0);
  one[0] = 1;
  if (d == 1) {
    x[0] = (p - f[0]) % p;  // X == -f0 modulo X + f0
  } else {
    x[1] = 1;
  }
  cur = x;
  const std::uint64_t limit = ipow(p, static_cast<unsigned>(d));
  for (std::uint64_t k = 1; k < limit; ++k) {
    if (cur == one) return k;
    cur = mulmod_poly(p, cur, x, f);
  }
  return 0;
}

std::vector<std::uint32_t> naive_smallest_primitive(std::uint32_t p, int degree) {
  const std::uint64_t target = ipow(p, static_cast<unsigned>(degree)) - 1;
  const std::uint64_t count = ipow(p, static_cast<unsigned>(degree));
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<std::uint32_t> f(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t t = v;
    for (int i = 0; i < degree; ++i, t /= p) f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
    f.back() = 1;
    if (naive_order_of_x(p, f) == target) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

Elem schoolbook_pow(const FieldCtx& F, Elem a, std::uint64_t e) {
  Elem result = F.one();
  while (e) {
    if (e & 1) result = F.mul_schoolbook(result, a);
    a = F.mul_schoolbook(a, a);
    e >>= 1;
  }
  return result;
}

Elem frobenius_sum(const FieldCtx& F, Elem x, std::uint64_t Q, int k) {
  Elem acc = F.zero();
  Elem term = x;
  for (int i = 0; i < k; ++i) {
    acc = F.add(acc, term);
    term = schoolbook_pow(F, term, Q);
  }
  return acc;
}

std::vector<CodeParams> all_params(const CodeSpec& spec) {
  const FieldCtx& F = *spec.field;
  std::vector<Elem> full;
  for (std::uint64_t c = 0; c < F.order(); ++c) full.push_back(Elem{static_cast<std::uint32_t>(c)});
  const std::vector<Elem> fqm = spec.odd() ? F.subfield_elements(spec.m) : std::vector<Elem>{};
  const std::vector<Elem> fq = F.subfield_elements(1);

  std::vector<CodeParams> out{CodeParams{}};
  const auto expand = [&out](const std::vector<Elem>& domain, auto setter) {
    std::vector<CodeParams> next;
    next.reserve(out.size() * domain.size());
    for (const auto& base : out) {
      for (Elem v : domain) {
        CodeParams p = base;
        setter(p, v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  };
  if (spec.params.beta) expand(full, [](CodeParams& p, Elem v) { p.beta = v; });
  if (spec.params.delta0) expand(fqm, [](CodeParams& p, Elem v) { p.delta0 = v; });
  for (int j = 0; j < spec.params.lambdas; ++j) expand(full, [](CodeParams& p, Elem v) { p.lambdas.push_back(v); });
  if (spec.params.constant) expand(fq, [](CodeParams& p, Elem v) { p.constant = v; });
  return out;
}

WeightDistribution naive_distribution(const CodeSpec& spec) {
  WeightDistribution dist{spec.q, spec.m, spec.family, {}};
  for (const auto& params : all_params(spec)) dist.counts[weight(codeword(spec, params))] += 1;
  return dist;
}

int naive_rank(const QuadForm& f) {
  const FieldCtx& F = f.field();
  std::uint64_t radical = 0;
  for (std::uint64_t y = 0; y < F.order(); ++y) {
    bool in = true;
    for (std::uint64_t x = 0; x < F.order() && in; ++x) {
      in = f.polar_label(Elem{static_cast<std::uint32_t>(x)}, Elem{static_cast<std::uint32_t>(y)}) == 0;
    }
    if (in) ++radical;
  }
  int dim = 0;
  for (std::uint64_t v = 1; v < radical; v *= F.q()) ++dim;
  if (ipow(F.q(), static_cast<unsigned>(dim)) != radical) throw std::logic_error("radical is not a subspace");
  return F.s() - dim;
}

namespace {

// numerator / q, which must be exact.
BigInt over_q(const BigInt& numerator, std::uint64_t q) {
  if (numerator % q != 0) throw std::logic_error("row count is not integral");
  return numerator / q;
}

void put(SumHistogram& h, const BigInt& value, const BigInt& count) {
  if (count != 0) h[static_cast<std::int64_t>(value)] += count;
}

}  // namespace

SumHistogram expected_s_rows(std::uint64_t q, int s, int r, int eps) {
  const BigInt bq = q;
  const BigInt qs = big_pow(bq, static_cast<unsigned>(s));
  const BigInt qr = big_pow(bq, static_cast<unsigned>(r));
  const BigInt qh = big_pow(bq, static_cast<unsigned>(r / 2));
  const BigInt top = big_pow(bq, static_cast<unsigned>(s - r / 2));
  SumHistogram h;
  put(h, 0, qs - qr);
  put(h, eps * (bq - 1) * top, over_q(qr + eps * (bq - 1) * qh, q));
  put(h, -eps * top, over_q((qr - eps * qh) * (bq - 1), q));
  return h;
}

SumHistogram expected_r_rows(std::uint64_t q, int s, int r, int eps) {
  const BigInt bq = q;
  const BigInt qs = big_pow(bq, static_cast<unsigned>(s));
  const BigInt qr = big_pow(bq, static_cast<unsigned>(r));
  const BigInt qh = big_pow(bq, static_cast<unsigned>(r / 2));
  const BigInt top = big_pow(bq, static_cast<unsigned>(s - r / 2));
  SumHistogram h;
  put(h, 0, qs - qr);
  put(h, eps * (bq - 1) * top, over_q(qr - eps * qh, q));
  put(h, -eps * top, over_q(qr * bq - qr + eps * qh, q));
  return h;
}

}  // namespace wtenum::testing
