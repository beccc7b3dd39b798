#pragma once

// Closed-form side: Gaussian binomials at basis -q, the rank frequencies f_j,
// the eigenvalues xi_j of the Hermitian forms graph, and the predicted weight
// distributions of C, D and E.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wtenum/bigint.hpp"
#include "wtenum/distribution.hpp"
#include "wtenum/family.hpp"

namespace wtenum {

// prod_{i<j} (l^m - l^i) / (l^j - l^i), exact. DomainError for l == 1, for
// j outside [0, m], or when a denominator vanishes.
BigInt gaussian_binomial(int m, int j, std::int64_t basis);

// j -> number of forms of rank 2j, 0 <= j <= m.
struct RankDistribution {
  std::uint64_t q = 0;
  int m = 0;
  std::map<int, BigInt> counts;

  BigInt total() const;
  friend bool operator==(const RankDistribution&, const RankDistribution&) = default;
};

// f_j; asserts integrality, positivity and sum q^(m^2).
RankDistribution frequencies(std::uint64_t q, int m);

// (xi_0, ..., xi_m), xi_j = ((-q)^(2m-j) - 1) / (q + 1).
std::vector<BigInt> eigenvalues(std::uint64_t q, int m);

// Minimum distance stated for the family; nullopt when the closed form is not
// an integer (C at m = 1).
std::optional<std::uint64_t> closed_form_min_distance(std::uint64_t q, int m, Family family);

// Rejects parameters outside the predictor's range: q not a prime power,
// m < 1, q^(2m) >= 2^62, and the degenerate E_(2,1).
void check_prediction_domain(std::uint64_t q, int m, Family family);

// Closed-form rows summed over j and merged by weight. Asserts the total q^k and the
// minimum distance.
WeightDistribution predict(std::uint64_t q, int m, Family family);

}  // namespace wtenum
