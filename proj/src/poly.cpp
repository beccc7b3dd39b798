#include "wtenum/poly.hpp"

#include <algorithm>
#include <ostream>

#include "wtenum/error.hpp"

namespace wtenum {

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Elem c = f.coeffs()[i];
    if (c.code == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c.code != 1 || i == 0) os << "[" << c.code << "]";
    if (i > 0) os << "X^" << i;
  }
  return os;
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].code == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(std::move(out));
}

Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Elem> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  const Elem lead_inv = F.inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].code == 0) continue;
    const Elem factor = F.mul(r[k], lead_inv);
    for (std::size_t i = 0; i <= db; ++i) {
      r[k - db + i] = F.sub(r[k - db + i], F.mul(factor, b.coeffs()[i]));
    }
  }
  if (r.size() > db) r.resize(db);
  return Poly(std::move(r));
}

Elem poly_eval(const FieldCtx& F, const Poly& f, Elem x) {
  Elem acc = F.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
  return acc;
}

bool coefficients_in_subfield(const FieldCtx& F, const Poly& f, int d) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [&](Elem c) { return F.in_subfield(c, d); });
}

bool divides_x_pow_minus_one(const FieldCtx& F, const Poly& f, std::uint64_t n) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  // X^n mod f by square-and-multiply.
  const Poly x = poly_mod(F, Poly::monomial(F.one(), 1), f);
  Poly result = poly_mod(F, Poly{F.one()}, f);
  Poly base = x;
  std::uint64_t e = n;
  while (e > 0) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), f);
    e >>= 1;
    if (e) base = poly_mod(F, poly_mul(F, base, base), f);
  }
  return poly_sub(F, result, Poly{F.one()}).is_zero();
}

Poly minimal_polynomial(const FieldCtx& F, Elem x) {
  Poly result{F.one()};
  Elem c = x;
  do {
    result = poly_mul(F, result, Poly{F.neg(c), F.one()});
    c = F.frobenius(c);
  } while (c != x);
  if (!coefficients_in_subfield(F, result, 1)) {
    throw ConsistencyError("minimal polynomial has coefficients outside F_q");
  }
  return result;
}

}  // namespace wtenum
