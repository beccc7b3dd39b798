#pragma once

// Small-scale witness for the Hermitian forms graph: all m x m Hermitian
// matrices over F_{q^2}, the rank-1 connection set, the Cayley spectrum via
// characters, and the linear map onto the coefficient space of the forms.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wtenum/field.hpp"
#include "wtenum/quadform.hpp"

namespace wtenum {

inline constexpr std::uint64_t kDefaultWitnessBudget = std::uint64_t{1} << 20;

// Row-major m x m entries in F_{q^2} (a subfield of the context's F_{q^{2m}}),
// with h_ii in F_q and h_ki = h_ik^q.
struct HermitianMatrix {
  int m = 0;
  std::vector<Elem> entries;

  Elem at(int i, int k) const { return entries[static_cast<std::size_t>(i * m + k)]; }
  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;
};

// The field F_{q^{2m}} the witness works in.
std::shared_ptr<const FieldCtx> witness_field(std::uint64_t q, int m);

// q^(m^2) matrices: diagonal entries then upper entries in row-major order,
// each running over its sorted domain, first position fastest.
std::vector<HermitianMatrix> enumerate_hermitian(const FieldCtx& F,
                                                 std::uint64_t budget = kDefaultWitnessBudget);
std::vector<HermitianMatrix> enumerate_hermitian(std::uint64_t q, int m,
                                                 std::uint64_t budget = kDefaultWitnessBudget);

bool is_hermitian(const FieldCtx& F, const HermitianMatrix& h);
int matrix_rank_over_qsquared(const FieldCtx& F, const HermitianMatrix& h);
HermitianMatrix add(const FieldCtx& F, const HermitianMatrix& a, const HermitianMatrix& b);

// Tr_{q/p}(trace(A H)) as a residue mod p.
std::uint32_t hermitian_pairing(const FieldCtx& F, const HermitianMatrix& a, const HermitianMatrix& h);

// Number of rank-1 matrices; throws ConsistencyError unless it equals
// (q^(2m) - 1) / (q + 1).
std::uint64_t rank1_count(std::uint64_t q, int m, std::uint64_t budget = kDefaultWitnessBudget);

// Eigenvalue -> multiplicity over all characters chi_A, A in the Hermitian set.
SumHistogram cayley_spectrum(std::uint64_t q, int m, std::uint64_t budget = kDefaultWitnessBudget);

// The map H -> (alpha^(q^a) H alpha^T)_a with alpha_j = pi^j, 0 <= j < m, and a
// running over q^m (odd m only) then q, q^3, ..., q^(2t-1).
std::vector<Elem> isomorphism_image(const FieldCtx& F, const HermitianMatrix& h);

struct IsomorphismReport {
  bool additive = false;
  bool injective = false;
  bool lands_in_group = false;
  bool rank1_onto_connection_set = false;
  std::uint64_t connection_set_size = 0;
  bool connection_set_size_ok = false;
  std::string detail;

  bool ok() const {
    return additive && injective && lands_in_group && rank1_onto_connection_set && connection_set_size_ok;
  }
};

IsomorphismReport verify_isomorphism(std::uint64_t q, int m, std::uint64_t budget = kDefaultWitnessBudget);

struct WitnessReport {
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t hermitian_count = 0;
  std::uint64_t rank1_count = 0;
  SumHistogram spectrum;
  bool isomorphism_ok = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

WitnessReport run_witness(std::uint64_t q, int m, std::uint64_t budget = kDefaultWitnessBudget);

}  // namespace wtenum
