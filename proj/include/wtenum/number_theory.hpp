#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wtenum {

bool is_prime(std::uint64_t v);

// Distinct prime factors in increasing order. factor(1) is empty.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// (p, e) with v == p^e, or nullopt when v is not a prime power.
std::optional<std::pair<std::uint32_t, int>> prime_power(std::uint64_t v);

// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

// base^exp; throws DomainError on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);

}  // namespace wtenum
