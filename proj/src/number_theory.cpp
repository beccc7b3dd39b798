#include "wtenum/number_theory.hpp"

#include <string>

#include "wtenum/error.hpp"

namespace wtenum {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d <= v / d; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= v / d; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::optional<std::pair<std::uint32_t, int>> prime_power(std::uint64_t v) {
  if (v < 2) return std::nullopt;
  const auto factors = prime_factors(v);
  if (factors.size() != 1 || factors[0] > UINT32_MAX) return std::nullopt;
  int e = 0;
  while (v > 1) {
    v /= factors[0];
    ++e;
  }
  return std::make_pair(static_cast<std::uint32_t>(factors[0]), e);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  auto r = checked_pow(base, exp);
  if (!r) {
    throw DomainError(std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
  }
  return *r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

}  // namespace wtenum
