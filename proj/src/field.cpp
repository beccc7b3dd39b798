#include "wtenum/field.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {

std::ostream& operator<<(std::ostream& os, Elem x) { return os << "Elem{" << x.code << "}"; }

namespace {

using Digits = std::vector<std::uint32_t>;

// (a * b) mod f over F_p; a, b have degree < deg f, f monic.
Digits poly_mulmod(const Digits& a, const Digits& b, std::span<const std::uint32_t> f,
                   std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * deg, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  for (std::size_t k = prod.size(); k-- > deg;) {
    const std::uint64_t c = prod[k] % p;
    if (c == 0) continue;
    // subtract c * x^(k-deg) * f
    for (std::size_t i = 0; i <= deg; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      prod[k - deg + i] = (prod[k - deg + i] + p - sub) % p;
    }
  }
  Digits out(deg);
  for (std::size_t i = 0; i < deg; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
  return out;
}

Digits poly_powmod(Digits base, std::uint64_t exp, std::span<const std::uint32_t> f,
                   std::uint32_t p) {
  Digits result(f.size() - 1, 0);
  result[0] = 1;
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    exp >>= 1;
    if (exp) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

bool is_one(const Digits& d) {
  if (d[0] != 1) return false;
  return std::all_of(d.begin() + 1, d.end(), [](std::uint32_t c) { return c == 0; });
}

bool primitive_with_factors(std::uint32_t p, std::span<const std::uint32_t> f,
                            std::uint64_t group_order,
                            const std::vector<std::uint64_t>& factors) {
  const std::size_t deg = f.size() - 1;
  Digits x(deg, 0);
  if (deg == 1) {
    x[0] = (p - f[0] % p) % p;
  } else {
    x[1] = 1;
  }
  if (!is_one(poly_powmod(x, group_order, f, p))) return false;
  for (std::uint64_t r : factors) {
    if (is_one(poly_powmod(x, group_order / r, f, p))) return false;
  }
  return true;
}

}  // namespace

bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1 || poly[0] % p == 0) return false;
  const auto order = checked_pow(p, static_cast<unsigned>(poly.size() - 1));
  if (!order) throw DomainError("polynomial degree too large");
  const std::uint64_t group_order = *order - 1;
  return primitive_with_factors(p, poly, group_order, prime_factors(group_order));
}

std::vector<std::uint32_t> primitive_polynomial(std::uint32_t p, int degree, std::size_t rank) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("degree must be positive");
  const auto order = checked_pow(p, static_cast<unsigned>(degree));
  if (!order) throw DomainError("field order overflows 64 bits");
  const std::uint64_t group_order = *order - 1;
  const auto factors = prime_factors(group_order);
  std::vector<std::uint32_t> f(static_cast<std::size_t>(degree) + 1, 0);
  f[static_cast<std::size_t>(degree)] = 1;
  for (std::uint64_t v = 0; v < *order; ++v) {
    std::uint64_t rest = v;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (f[0] == 0) continue;
    if (primitive_with_factors(p, f, group_order, factors)) {
      if (rank == 0) return f;
      --rank;
    }
  }
  throw DomainError("fewer primitive polynomials than the requested rank");
}

std::uint64_t coset_size(std::uint64_t u, std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw DomainError("coset_size needs n > 0");
  u %= n;
  std::uint64_t v = mulmod(u, q % n, n);
  std::uint64_t len = 1;
  while (v != u) {
    v = mulmod(v, q % n, n);
    ++len;
  }
  return len;
}

// ---------------------------------------------------------------------------

std::uint32_t SmallField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!add_.empty()) return add_[a * q_ + b];
  return from_big(ctx_->add(to_big_[a], to_big_[b]));
}

std::uint32_t SmallField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (!neg_.empty()) return neg_[a];
  return from_big(ctx_->neg(to_big_[a]));
}

std::uint32_t SmallField::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_.empty()) return mul_[a * q_ + b];
  return from_big(ctx_->mul(to_big_[a], to_big_[b]));
}

std::uint32_t SmallField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (!inv_.empty()) return inv_[a];
  return from_big(ctx_->inv(to_big_[a]));
}

std::uint32_t SmallField::from_big(Elem x) const {
  auto it = from_big_.find(x.code);
  if (it == from_big_.end()) throw DomainError("element is not in F_q");
  return it->second;
}

// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(std::uint32_t p, int e, int s, const FieldOptions& options)
    : p_(p), e_(e), s_(s), degree_(e * s) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (e < 1) throw DomainError("extension degree e must be >= 1");
  if (s < 2 || s % 2 != 0) throw DomainError("s must be even and >= 2");
  const auto order = checked_pow(p, static_cast<unsigned>(degree_));
  if (!order || *order > (std::uint64_t{1} << 32)) {
    throw DomainError("field order p^(e*s) exceeds the 32-bit word budget");
  }
  order_ = *order;
  q_ = ipow(p, static_cast<unsigned>(e));
  if (p_ == 2) mask_ = static_cast<std::uint32_t>(order_ - 1);

  modulus_ = primitive_polynomial(p, degree_, options.modulus_rank);
  for (int i = 0; i <= degree_; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(i < degree_ ? ipow(p, static_cast<unsigned>(i)) : 0));
  }
  reduction_.resize(p_);
  for (std::uint32_t t = 0; t < p_; ++t) {
    Digits d(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) {
      const std::uint64_t c = static_cast<std::uint64_t>(t) * modulus_[static_cast<std::size_t>(i)] % p_;
      d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((p_ - c) % p_);
    }
    reduction_[t] = from_digits(d);
  }
  primitive_ = Elem{p_};

  if (order_ <= options.log_table_limit) {
    const std::uint64_t n = order_ - 1;
    exp_.resize(n);
    log_.assign(order_, 0);
    Elem cur = one();
    for (std::uint64_t k = 0; k < n; ++k) {
      exp_[k] = cur.code;
      log_[cur.code] = static_cast<std::uint32_t>(k);
      cur = mul_by_x(cur);
      if (cur == one() && k + 1 < n) {
        throw ConsistencyError("modulus is not primitive: order of x is " + std::to_string(k + 1));
      }
    }
    if (cur != one()) throw ConsistencyError("order of x does not divide q^s - 1");
  }

  frob_p_.resize(static_cast<std::size_t>(degree_));
  frob_q_.resize(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    const Elem monomial{pow_p_[static_cast<std::size_t>(i)]};
    Elem img = monomial;
    for (int k = 0; k < e_; ++k) {
      Elem acc = one();
      for (std::uint32_t j = 0; j < p_; ++j) acc = mul_schoolbook(acc, img);
      img = acc;
      if (k == 0) frob_p_[static_cast<std::size_t>(i)] = img;
    }
    frob_q_[static_cast<std::size_t>(i)] = img;
  }

  build_small_field();
}

Elem FieldCtx::constant(std::uint32_t c) const { return Elem{c % p_}; }

std::vector<std::uint32_t> FieldCtx::digits(Elem x) const {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(degree_));
  std::uint32_t c = x.code;
  for (auto& v : d) {
    v = c % p_;
    c /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i] % p_;
  if (code >= order_) throw DomainError("too many digits for this field");
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (int i = 0; i < degree_ && (x | y); ++i) {
    out += ((x % p_ + y % p_) % p_) * pow_p_[static_cast<std::size_t>(i)];
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem FieldCtx::neg(Elem a) const {
  if (p_ == 2) return a;
  std::uint32_t x = a.code, out = 0;
  for (int i = 0; i < degree_ && x; ++i) {
    out += ((p_ - x % p_) % p_) * pow_p_[static_cast<std::size_t>(i)];
    x /= p_;
  }
  return Elem{out};
}

Elem FieldCtx::scale(Elem a, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return zero();
  if (c == 1) return a;
  std::uint32_t x = a.code, out = 0;
  for (int i = 0; i < degree_ && x; ++i) {
    out += static_cast<std::uint32_t>(static_cast<std::uint64_t>(x % p_) * c % p_) *
           pow_p_[static_cast<std::size_t>(i)];
    x /= p_;
  }
  return Elem{out};
}

Elem FieldCtx::mul_by_x(Elem a) const {
  if (p_ == 2) {
    const std::uint32_t top = (a.code >> (degree_ - 1)) & 1u;
    const std::uint32_t shifted = (a.code << 1) & mask_;
    return Elem{top ? shifted ^ reduction_[1].code : shifted};
  }
  const std::uint32_t high = pow_p_[static_cast<std::size_t>(degree_ - 1)];
  const std::uint32_t top = a.code / high;
  const Elem shifted{(a.code - top * high) * p_};
  return top ? add(shifted, reduction_[top]) : shifted;
}

Elem FieldCtx::mul_schoolbook(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  return from_digits(poly_mulmod(da, db, modulus_, p_));
}

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (!has_logs()) return mul_schoolbook(a, b);
  const std::uint64_t n = order_ - 1;
  std::uint64_t k = static_cast<std::uint64_t>(log_[a.code]) + log_[b.code];
  if (k >= n) k -= n;
  return Elem{exp_[k]};
}

Elem FieldCtx::inv(Elem a) const {
  if (a.code == 0) throw DomainError("inverse of zero");
  if (!has_logs()) return pow(a, order_ - 2);
  const std::uint64_t n = order_ - 1;
  return Elem{exp_[(n - log_[a.code]) % n]};
}

Elem FieldCtx::pow(Elem a, std::uint64_t exponent) const {
  if (exponent == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = order_ - 1;
  if (has_logs()) return Elem{exp_[mulmod(log_[a.code], exponent % n, n)]};
  Elem result = one();
  Elem base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul_schoolbook(result, base);
    exponent >>= 1;
    if (exponent) base = mul_schoolbook(base, base);
  }
  return result;
}

std::uint64_t FieldCtx::log(Elem x) const {
  if (!has_logs()) throw DomainError("discrete logs unavailable: field exceeds the log-table limit");
  if (x.code == 0) throw DomainError("log of zero");
  return log_[x.code];
}

Elem FieldCtx::exp(std::uint64_t k) const {
  const std::uint64_t n = order_ - 1;
  if (has_logs()) return Elem{exp_[k % n]};
  return pow(primitive_, k % n);
}

Elem FieldCtx::apply_linear(const std::vector<Elem>& images, Elem x) const {
  Elem acc = zero();
  if (p_ == 2) {
    std::uint32_t bits = x.code;
    for (std::size_t i = 0; bits; ++i, bits >>= 1) {
      if (bits & 1u) acc.code ^= images[i].code;
    }
    return acc;
  }
  std::uint32_t c = x.code;
  for (std::size_t i = 0; c; ++i) {
    const std::uint32_t d = c % p_;
    c /= p_;
    if (d) acc = add(acc, scale(images[i], d));
  }
  return acc;
}

Elem FieldCtx::frobenius_pow(Elem x, int k) const {
  for (int i = 0; i < k; ++i) x = frobenius(x);
  return x;
}

Elem FieldCtx::trace(Elem x, TraceLevel level) const {
  int terms = 0;
  bool by_p = false;
  switch (level) {
    case TraceLevel::kQsToQ:
      terms = s_;
      break;
    case TraceLevel::kQsToP:
      terms = degree_;
      by_p = true;
      break;
    case TraceLevel::kQmToQ:
      if (m() % 2 == 0) throw DomainError("Tr_{q^m/q} is only used for odd m");
      if (!in_subfield(x, m())) throw DomainError("argument is not in F_{q^m}");
      terms = m();
      break;
    case TraceLevel::kQToP:
      if (!in_subfield(x, 1)) throw DomainError("argument is not in F_q");
      terms = e_;
      by_p = true;
      break;
  }
  Elem acc = zero();
  Elem y = x;
  for (int i = 0; i < terms; ++i) {
    acc = add(acc, y);
    y = by_p ? frobenius_p(y) : frobenius(y);
  }
  return acc;
}

std::vector<Elem> FieldCtx::subfield_elements(int d) const {
  if (d < 1 || s_ % d != 0) throw DomainError("subfield degree must divide s");
  if (!has_logs()) throw DomainError("subfield enumeration needs log tables");
  const std::uint64_t size = ipow(q_, static_cast<unsigned>(d));
  const std::uint64_t step = (order_ - 1) / (size - 1);
  std::vector<Elem> out;
  out.reserve(size);
  out.push_back(zero());
  for (std::uint64_t j = 0; j + 1 < size; ++j) out.push_back(Elem{exp_[j * step]});
  std::sort(out.begin(), out.end());
  return out;
}

void FieldCtx::build_small_field() {
  fq_.ctx_ = this;
  fq_.p_ = p_;
  fq_.q_ = static_cast<std::uint32_t>(q_);
  const Elem w = pow(primitive_, (order_ - 1) / (q_ - 1));
  std::vector<Elem> w_pows(static_cast<std::size_t>(e_));
  w_pows[0] = one();
  for (int i = 1; i < e_; ++i) w_pows[static_cast<std::size_t>(i)] = mul(w_pows[static_cast<std::size_t>(i - 1)], w);

  fq_.to_big_.resize(q_);
  for (std::uint32_t label = 0; label < q_; ++label) {
    Elem acc = zero();
    std::uint32_t rest = label;
    for (int i = 0; i < e_; ++i) {
      acc = add(acc, scale(w_pows[static_cast<std::size_t>(i)], rest % p_));
      rest /= p_;
    }
    fq_.to_big_[label] = acc;
    fq_.from_big_.emplace(acc.code, label);
  }
  if (fq_.from_big_.size() != q_) throw ConsistencyError("F_q labelling is not injective");

  constexpr std::uint64_t kMaxTabulated = 1024;
  if (q_ <= kMaxTabulated) {
    const auto q = fq_.q_;
    fq_.add_.resize(static_cast<std::size_t>(q) * q);
    fq_.mul_.resize(static_cast<std::size_t>(q) * q);
    fq_.neg_.resize(q);
    fq_.inv_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        fq_.add_[a * q + b] = static_cast<std::uint16_t>(fq_.from_big(add(fq_.to_big_[a], fq_.to_big_[b])));
        fq_.mul_[a * q + b] = static_cast<std::uint16_t>(fq_.from_big(mul(fq_.to_big_[a], fq_.to_big_[b])));
      }
      fq_.neg_[a] = static_cast<std::uint16_t>(fq_.from_big(neg(fq_.to_big_[a])));
      fq_.inv_[a] = a == 0 ? 0 : static_cast<std::uint16_t>(fq_.from_big(inv(fq_.to_big_[a])));
    }
  }
  fq_.trace_p_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Elem t = trace(fq_.to_big_[a], TraceLevel::kQToP);
    if (!in_prime_field(t)) throw ConsistencyError("Tr_{q/p} left the prime field");
    fq_.trace_p_[a] = static_cast<std::uint16_t>(t.code);
  }

  basis_trace_.resize(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    const Elem t = trace(Elem{pow_p_[static_cast<std::size_t>(i)]}, TraceLevel::kQsToQ);
    basis_trace_[static_cast<std::size_t>(i)] = fq_.from_big(t);
  }

  if (m() % 2 == 1) {
    // theta / Tr_{q^s/q^m}(theta) for the first theta of nonzero relative trace.
    for (std::uint64_t c = 1; c < order_; ++c) {
      const Elem theta{static_cast<std::uint32_t>(c)};
      const Elem rel = add(theta, frobenius_pow(theta, m()));
      if (rel.code != 0) {
        relative_unit_ = mul(theta, inv(rel));
        break;
      }
    }
  }
}

std::uint32_t FieldCtx::trace_m_label(Elem y) const {
  if (m() % 2 == 0) throw DomainError("Tr_{q^m/q} is only used for odd m");
  return trace_label(mul(relative_unit_, y));
}

std::uint32_t FieldCtx::trace_label(Elem x) const {
  std::uint32_t acc = 0;
  std::uint32_t c = x.code;
  if (p_ == 2) {
    for (std::size_t i = 0; c; ++i, c >>= 1) {
      if (c & 1u) acc ^= basis_trace_[i];
    }
    return acc;
  }
  for (std::size_t i = 0; c; ++i) {
    const std::uint32_t d = c % p_;
    c /= p_;
    if (d) acc = fq_.add(acc, fq_.mul(d, basis_trace_[i]));
  }
  return acc;
}

std::vector<std::uint16_t> FieldCtx::trace_sequence() const {
  if (!has_logs()) throw DomainError("trace sequence needs log tables");
  std::vector<std::uint16_t> out(order_ - 1);
  for (std::uint64_t k = 0; k + 1 < order_; ++k) {
    out[k] = static_cast<std::uint16_t>(trace_label(Elem{exp_[k]}));
  }
  return out;
}

std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, int e, int s, const FieldOptions& options) {
  return std::make_shared<const FieldCtx>(p, e, s, options);
}

}  // namespace wtenum
