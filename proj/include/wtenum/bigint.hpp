#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace wtenum {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt big_pow(std::int64_t base, unsigned exp) { return big_pow(BigInt(base), exp); }

}  // namespace wtenum
