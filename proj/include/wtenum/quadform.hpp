#pragma once

// The quadratic forms behind the three code families:
//   even m:  Q(x) = sum_{j=1..t} Tr_{q^s/q}(lambda_j x^(q^(2j-1)+1))
//   odd m:   P(x) = Tr_{q^m/q}(delta_0 x^(q^m+1)) + (same sum)
// together with brute-force exponential sums over F_{q^s}.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "wtenum/bigint.hpp"
#include "wtenum/field.hpp"

namespace wtenum {

class QuadForm {
 public:
  // delta0 must be present (and in F_{q^m}) exactly when m is odd; lambdas
  // has t = floor(m/2) entries.
  QuadForm(std::shared_ptr<const FieldCtx> field, std::optional<Elem> delta0, std::vector<Elem> lambdas);

  // q^(m^2), the number of coefficient tuples.
  static std::uint64_t space_size(const FieldCtx& F);
  // Canonical enumeration of the coefficient tuples: delta_0 by position in
  // the sorted F_{q^m} (odd m), then lambda_1, lambda_2, ... by code, as a
  // little-endian mixed-radix index.
  static QuadForm from_index(std::shared_ptr<const FieldCtx> field, std::uint64_t index);
  // Sorted F_{q^m}; empty for even m.
  static std::vector<Elem> delta0_domain(const FieldCtx& F);

  const FieldCtx& field() const { return *field_; }
  const std::shared_ptr<const FieldCtx>& field_ptr() const { return field_; }
  const std::optional<Elem>& delta0() const { return delta0_; }
  const std::vector<Elem>& lambdas() const { return lambdas_; }
  bool is_zero() const;

  // Q(x) as an F_q label.
  std::uint32_t eval_label(Elem x) const;
  // B(x, y) = Q(x + y) - Q(x) - Q(y) as an F_q label.
  std::uint32_t polar_label(Elem x, Elem y) const;
  // Q(pi^i) for i in [0, n), as labels.
  std::vector<std::uint16_t> value_sequence() const;

  // Codimension of the radical of B; memoized.
  int rank() const;
  // Sign of T_Q; memoized. +1 for the zero form.
  int epsilon() const;

 private:
  struct Cache {
    std::once_flag rank_once;
    std::once_flag epsilon_once;
    int rank = -1;
    int epsilon = 0;
  };

  std::shared_ptr<const FieldCtx> field_;
  std::optional<Elem> delta0_;
  std::vector<Elem> lambdas_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t delta0_exponent_ = 0;
  std::shared_ptr<Cache> cache_;
};

// value -> count; values are rational integers.
using SumHistogram = std::map<std::int64_t, BigInt>;

// Work ceiling for the O(q^(2s)) histogram sweeps.
inline constexpr std::uint64_t kDefaultSweepBudget = std::uint64_t{1} << 32;

// Q(x) as an element of F_q.
Elem eval_form(const QuadForm& f, Elem x);

int rank(const QuadForm& f);
int epsilon(const QuadForm& f);

// T_Q = sum_x omega_p^(Tr_{q/p}(Q(x))), exact.
std::int64_t big_T(const QuadForm& f, std::uint64_t budget = kDefaultSweepBudget);

// |{x : Q(x) + Tr_{q^s/q}(beta x) = zeta}|.
std::uint64_t count_solutions(const QuadForm& f, Elem beta, Elem zeta,
                              std::uint64_t budget = kDefaultSweepBudget);

// Histogram of Q(x) + Tr_{q^s/q}(beta x) over x, indexed by F_q label.
std::vector<std::uint64_t> value_counts(const QuadForm& f, Elem beta,
                                        std::uint64_t budget = kDefaultSweepBudget);

// S_Q(beta) = q N_{Q,beta}(0) - q^s over all beta.
SumHistogram s_histogram(const QuadForm& f, std::uint64_t budget = kDefaultSweepBudget);

// R_{Q,b}(beta) = q N_{Q,beta}(-b) - q^s over all beta; b in F_q^*.
SumHistogram r_histogram(const QuadForm& f, Elem b, std::uint64_t budget = kDefaultSweepBudget);

// sum_v counts[v] * omega_p^v for a primitive p-th root of unity omega_p,
// p = counts.size(). Throws ConsistencyError unless the sum is rational,
// i.e. unless counts[1] == ... == counts[p-1].
std::int64_t contract_roots_of_unity(std::span<const std::uint64_t> counts);

// Gram matrix B(pi^a, pi^b), a, b < s, row-major F_q labels.
std::vector<std::uint32_t> gram_matrix(const QuadForm& f);

// Rank over F_q of a dim x dim row-major matrix of labels; destroys its input.
int matrix_rank(std::vector<std::uint32_t>& matrix, int dim, const SmallField& fq);

}  // namespace wtenum
