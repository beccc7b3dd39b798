#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "wtenum/field.hpp"

namespace wtenum {

// Polynomial with coefficients in F_{q^s} (usually a subfield), low-to-high,
// with no trailing zero coefficients. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);
  Poly(std::initializer_list<Elem> coeffs) : Poly(std::vector<Elem>(coeffs)) {}

  static Poly monomial(Elem c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{}; }
  Elem leading() const { return coeffs_.empty() ? Elem{} : coeffs_.back(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Elem> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
// Remainder of a modulo a nonzero b.
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Elem poly_eval(const FieldCtx& F, const Poly& f, Elem x);

// True when every coefficient lies in F_{q^d}.
bool coefficients_in_subfield(const FieldCtx& F, const Poly& f, int d);

// True when f divides X^n - 1.
bool divides_x_pow_minus_one(const FieldCtx& F, const Poly& f, std::uint64_t n);

// Minimal polynomial of x over F_q: the monic product of (X - c) over the
// distinct conjugates c = x^(q^i). Throws ConsistencyError if a coefficient
// falls outside F_q.
Poly minimal_polynomial(const FieldCtx& F, Elem x);

}  // namespace wtenum
