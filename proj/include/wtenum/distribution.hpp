#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "wtenum/bigint.hpp"
#include "wtenum/family.hpp"

namespace wtenum {

// Exact weight -> count map of a code; only weights with nonzero count appear.
struct WeightDistribution {
  std::uint64_t q = 0;
  int m = 0;
  Family family = Family::kD;
  std::map<std::uint64_t, BigInt> counts;

  std::uint64_t length() const;
  int dimension() const { return family_dimension(family, m); }
  BigInt total() const;
  std::optional<std::uint64_t> min_positive_weight() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Smallest weight whose counts differ, or nullopt when the maps agree.
std::optional<std::uint64_t> first_difference(const WeightDistribution& a,
                                              const WeightDistribution& b);

}  // namespace wtenum
