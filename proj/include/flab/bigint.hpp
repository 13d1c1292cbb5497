#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

// Remainder in [0, |m|).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += (m < 0 ? BigInt(-m) : m);
  return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Floor division for integers (C++ division truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline BigInt to_integer(const Rational& x) {
  return boost::multiprecision::numerator(x);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  if (is_integral(x)) return to_integer(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace flab
