#include "wtenum/spectra.hpp"

#include <string>

#include "wtenum/error.hpp"
#include "wtenum/number_theory.hpp"

namespace wtenum {

BigInt gaussian_binomial(int m, int j, std::int64_t basis) {
  if (basis == 1) throw DomainError("Gaussian binomial needs basis != 1");
  if (j < 0 || j > m) throw DomainError("Gaussian binomial needs 0 <= j <= m");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt l = basis;
  for (int i = 0; i < j; ++i) {
    const BigInt li = big_pow(l, static_cast<unsigned>(i));
    num *= big_pow(l, static_cast<unsigned>(m)) - li;
    den *= big_pow(l, static_cast<unsigned>(j)) - li;
  }
  if (den == 0) throw DomainError("Gaussian binomial has a vanishing denominator");
  if (num % den != 0) throw ConsistencyError("Gaussian binomial is not integral");
  return num / den;
}

BigInt RankDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [j, c] : counts) sum += c;
  return sum;
}

RankDistribution frequencies(std::uint64_t q, int m) {
  if (q < 2 || m < 1) throw DomainError("frequencies needs q >= 2 and m >= 1");
  const BigInt bq = q;
  const BigInt qm = big_pow(bq, static_cast<unsigned>(m));
  const BigInt lead = (m % 2 == 1) ? qm : BigInt(-qm);  // (-1)^(m+1) q^m
  RankDistribution out{q, m, {}};
  out.counts[0] = 1;
  for (int j = 1; j <= m; ++j) {
    BigInt f = gaussian_binomial(m, j, -static_cast<std::int64_t>(q));
    for (int l = 0; l < j; ++l) {
      const BigInt ql = big_pow(bq, static_cast<unsigned>(l));
      f *= lead + ((l % 2 == 1) ? ql : BigInt(-ql));  // (-1)^(l+1) q^l
    }
    if (f <= 0) throw ConsistencyError("f_" + std::to_string(j) + " is not positive");
    out.counts[j] = f;
  }
  if (out.total() != big_pow(bq, static_cast<unsigned>(m * m))) {
    throw ConsistencyError("rank frequencies do not sum to q^(m^2)");
  }
  return out;
}

std::vector<BigInt> eigenvalues(std::uint64_t q, int m) {
  const BigInt minus_q = -BigInt(q);
  std::vector<BigInt> xi;
  for (int j = 0; j <= m; ++j) {
    const BigInt num = big_pow(minus_q, static_cast<unsigned>(2 * m - j)) - 1;
    if (num % (q + 1) != 0) throw ConsistencyError("eigenvalue is not integral");
    xi.push_back(num / (q + 1));
  }
  return xi;
}

std::optional<std::uint64_t> closed_form_min_distance(std::uint64_t q, int m, Family family) {
  const auto u = static_cast<unsigned>(2 * m - 2);
  const std::uint64_t d_code = ipow(q, u) * (q * q - q - 1);
  switch (family) {
    case Family::kD:
      return d_code;
    case Family::kE:
      return d_code - 1;
    case Family::kC: {
      // (q^(2m) - q^(2m-1)) (1 - q^-2) = q^(2m-3) (q - 1)^2 (q + 1)
      const std::uint64_t top = ipow(q, u) * (q - 1) * (q - 1) * (q + 1);
      if (top % q != 0) return std::nullopt;
      return top / q;
    }
  }
  return std::nullopt;
}

void check_prediction_domain(std::uint64_t q, int m, Family family) {
  if (!prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
  if (m < 1) throw DomainError("m must be at least 1");
  const auto qs = checked_pow(q, static_cast<unsigned>(2 * m));
  if (!qs || *qs >= (std::uint64_t{1} << 62)) throw DomainError("q^(2m) is out of range");
  if (family == Family::kE && q == 2 && m == 1) {
    throw DomainError("E_(2,1) is degenerate: X - 1 already divides the parity-check polynomial");
  }
}

WeightDistribution predict(std::uint64_t q, int m, Family family) {
  check_prediction_domain(q, m, family);
  const RankDistribution f = frequencies(q, m);
  const BigInt bq = q;
  const auto qpow = [&](int e) { return big_pow(bq, static_cast<unsigned>(e)); };
  const BigInt qs = qpow(2 * m);
  const BigInt w0 = qs - qpow(2 * m - 1);

  std::map<BigInt, BigInt> rows;
  const auto add = [&rows](const BigInt& w, const BigInt& c) {
    if (c != 0) rows[w] += c;
  };
  add(0, 1);
  if (family != Family::kC) {
    add(w0, qs - 1);
    if (family == Family::kE) {
      add(qs - 1, q - 1);
      add(w0 - 1, (qs - 1) * (q - 1));
    }
  }
  for (int j = 1; j <= m; ++j) {
    const BigInt& fj = f.counts.at(j);
    const int sign = (j % 2 == 0) ? 1 : -1;
    const BigInt big = sign * qpow(2 * m - j - 1);  // (-1)^j q^(2m-j-1)
    const BigInt small = sign * qpow(j - 1);        // (-1)^j q^(j-1)
    const BigInt q2j1 = qpow(2 * j - 1);
    if (family == Family::kC) {
      add(w0 - big * (q - 1), fj);
      continue;
    }
    add(w0, (qs - qpow(2 * j)) * fj);
    add(w0 - big * (q - 1), (q2j1 + small * (q - 1)) * fj);
    add(w0 + big, (q2j1 - small) * (q - 1) * fj);
    if (family == Family::kE) {
      add(w0 - 1, (qs - qpow(2 * j)) * (q - 1) * fj);
      add(w0 - 1 - big * (q - 1), (q2j1 - small) * (q - 1) * fj);
      add(w0 - 1 + big, (qpow(2 * j) - q2j1 + small) * (q - 1) * fj);
    }
  }

  WeightDistribution out{q, m, family, {}};
  for (const auto& [w, c] : rows) {
    if (w < 0 || w > qs - 1) throw ConsistencyError("predicted weight outside [0, n]");
    out.counts[static_cast<std::uint64_t>(w)] = c;
  }
  if (out.total() != qpow(family_dimension(family, m))) {
    throw ConsistencyError("predicted counts do not sum to q^k");
  }
  const auto d = closed_form_min_distance(q, m, family);
  if (d && out.min_positive_weight() != d) {
    throw ConsistencyError("predicted minimum weight differs from the stated distance");
  }
  return out;
}

}  // namespace wtenum
