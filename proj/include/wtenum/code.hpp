#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wtenum/family.hpp"
#include "wtenum/field.hpp"
#include "wtenum/poly.hpp"

namespace wtenum {

// Exponent set Gamma: 1, then q^m + 1 for odd m, then q^(2i-1) + 1 for
// 1 <= i <= floor(m/2).
std::vector<std::uint64_t> build_gamma(std::uint64_t q, int m);

// Shape of the parameter tuple (beta, delta_0, delta_1..delta_t, b).
struct ParameterSpace {
  bool beta = false;
  bool delta0 = false;
  int lambdas = 0;
  bool constant = false;
};

// Absent entries stay empty. lambdas holds delta_1..delta_t (lambda_1..lambda_t
// for even m).
struct CodeParams {
  std::optional<Elem> beta;
  std::optional<Elem> delta0;
  std::vector<Elem> lambdas;
  std::optional<Elem> constant;
};

struct CodeSpec {
  Family family = Family::kD;
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t n = 0;
  int k = 0;
  std::vector<std::uint64_t> gamma;
  Poly parity_check;
  ParameterSpace params;
  std::shared_ptr<const FieldCtx> field;

  int t() const { return m / 2; }
  bool odd() const { return m % 2 == 1; }
  // q^(2j-1) + 1, j = 1..t, aligned with CodeParams::lambdas.
  std::vector<std::uint64_t> lambda_exponents() const;
  // q^m + 1.
  std::uint64_t delta0_exponent() const;
};

// Assembles the parity-check polynomial from minimal polynomials of pi^(-u)
// and checks it against the closed-form dimension and X^n - 1.
// Throws ConsistencyError when either check fails (E_(2,1) is degenerate:
// X - 1 already divides h there).
CodeSpec build_code(std::shared_ptr<const FieldCtx> field, Family family);

struct Codeword {
  std::vector<Elem> values;
  CodeParams params;
};

// Coordinate i is the trace expression evaluated at pi^i (plus b for E),
// computed directly from field arithmetic and Frobenius traces.
Codeword codeword(const CodeSpec& spec, const CodeParams& params);

std::uint64_t weight(const Codeword& w);

// True when sum_l h_l c_{j-l} = 0 for every j (indices mod n), i.e.
// c(X) h(X) == 0 mod X^n - 1.
bool annihilated_by(const FieldCtx& F, const Poly& h, const std::vector<Elem>& values);

}  // namespace wtenum
