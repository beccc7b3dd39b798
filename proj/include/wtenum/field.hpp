#pragma once

// Arithmetic in F_{q^s}, q = p^e, with a single polynomial basis over F_p.
// Subfields (F_p, F_q, F_{q^2}, F_{q^m}) are the fixed sets of powers of
// Frobenius; there is no separate tower representation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace wtenum {

// An element of F_{q^s}: the coefficient vector over F_p packed as base-p
// digits, coefficient of x^i at digit i. Constants of F_p are codes 0..p-1.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

std::ostream& operator<<(std::ostream& os, Elem x);

enum class TraceLevel {
  kQsToQ,  // Tr_{q^s/q}
  kQsToP,  // Tr_{q^s/p}
  kQmToQ,  // Tr_{q^m/q}, odd m only; argument must lie in F_{q^m}
  kQToP,   // Tr_{q/p}; argument must lie in F_q
};

struct FieldOptions {
  // Discrete log tables are built only for fields with at most this many elements.
  std::uint64_t log_table_limit = std::uint64_t{1} << 26;
  // 0 picks the lexicographically smallest primitive modulus, 1 the next one, ...
  std::size_t modulus_rank = 0;
};

class FieldCtx;

// F_q with its elements labelled 0..q-1. Label sum_i d_i p^i stands for
// sum_i d_i w^i with w = pi^((q^s-1)/(q-1)). Labels below p are the prime
// field and addition of labels is digitwise mod p.
class SmallField {
 public:
  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  // Tr_{q/p}, as a label below p.
  std::uint32_t trace_p(std::uint32_t a) const { return trace_p_[a]; }

  Elem to_big(std::uint32_t label) const { return to_big_[label]; }
  // Throws DomainError when x is not in F_q.
  std::uint32_t from_big(Elem x) const;

  // Row-major q*q tables; empty when q is too large to tabulate.
  bool tabulated() const { return !add_.empty(); }
  const std::vector<std::uint16_t>& add_table() const { return add_; }

 private:
  friend class FieldCtx;

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::vector<Elem> to_big_;
  std::unordered_map<std::uint32_t, std::uint32_t> from_big_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> trace_p_;
};

// Immutable description of F_p within F_q within F_{q^s} with a fixed
// primitive element pi (the class of x modulo the defining polynomial).
// Safe to share between threads.
class FieldCtx {
 public:
  FieldCtx(std::uint32_t p, int e, int s, const FieldOptions& options);
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  int e() const { return e_; }
  int s() const { return s_; }
  int m() const { return s_ / 2; }
  // Degree of F_{q^s} over F_p.
  int degree() const { return degree_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t order() const { return order_; }
  // Multiplicative order of pi, q^s - 1.
  std::uint64_t n() const { return order_ - 1; }
  // Defining polynomial over F_p, low-to-high, monic of length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem primitive() const { return primitive_; }
  Elem constant(std::uint32_t c) const;

  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  // c * a for c in F_p.
  Elem scale(Elem a, std::uint32_t c) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t exp) const;
  // Polynomial-basis product reduced by the modulus; never touches log tables.
  Elem mul_schoolbook(Elem a, Elem b) const;

  bool has_logs() const { return !log_.empty(); }
  // Discrete log base pi. Throws when logs are unavailable or x == 0.
  std::uint64_t log(Elem x) const;
  // pi^k.
  Elem exp(std::uint64_t k) const;

  // x -> x^q and x -> x^p as F_p-linear maps on the coefficient vector.
  Elem frobenius(Elem x) const { return apply_linear(frob_q_, x); }
  Elem frobenius_p(Elem x) const { return apply_linear(frob_p_, x); }
  // x^(q^k).
  Elem frobenius_pow(Elem x, int k) const;

  Elem trace(Elem x, TraceLevel level) const;

  // True when x lies in F_{q^d}.
  bool in_subfield(Elem x, int d) const { return frobenius_pow(x, d) == x; }
  bool in_prime_field(Elem x) const { return x.code < p_; }
  // Elements of F_{q^d} (d | s) sorted by code. Requires log tables.
  std::vector<Elem> subfield_elements(int d) const;

  const SmallField& fq() const { return fq_; }
  // Tr_{q^s/q}(x) as an F_q label, evaluated as an F_p-linear functional.
  std::uint32_t trace_label(Elem x) const;
  // Tr_{q^s/q}(pi^k) for k in [0, n).
  std::vector<std::uint16_t> trace_sequence() const;
  // Tr_{q^m/q}(y) as an F_q label for y in F_{q^m}, odd m. Evaluated as
  // Tr_{q^s/q}(theta * y) with Tr_{q^s/q^m}(theta) = 1; y is not checked.
  std::uint32_t trace_m_label(Elem y) const;

 private:
  Elem apply_linear(const std::vector<Elem>& images, Elem x) const;
  Elem mul_by_x(Elem a) const;
  void build_small_field();

  std::uint32_t p_;
  int e_;
  int s_;
  int degree_;
  std::uint64_t q_;
  std::uint64_t order_;
  std::uint32_t mask_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  // Code of -t * (modulus - x^degree), indexed by t in F_p.
  std::vector<Elem> reduction_;
  Elem primitive_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> frob_p_;
  std::vector<Elem> frob_q_;
  std::vector<std::uint32_t> basis_trace_;
  Elem relative_unit_;
  SmallField fq_;
};

// Builds F_{q^s}, q = p^e, over the primitive modulus selected by options.
// Errors: p not prime, e < 1, s < 2 or odd, p^(e*s) beyond 32-bit codes.
std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, int e, int s,
                                           const FieldOptions& options = {});

// Lexicographically ordered primitive polynomials of the given degree over
// F_p, ordered by the integer whose base-p digits are the non-leading
// coefficients low-to-high. Returns the one at position rank.
std::vector<std::uint32_t> primitive_polynomial(std::uint32_t p, int degree, std::size_t rank = 0);

// True when the monic polynomial (low-to-high coefficients) is primitive over F_p.
bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly);

// Smallest l >= 1 with q^l * u == u (mod n).
std::uint64_t coset_size(std::uint64_t u, std::uint64_t n, std::uint64_t q);

}  // namespace wtenum
