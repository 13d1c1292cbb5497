#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flab/bigint.hpp"

namespace flab {

// Dense integer polynomial, coefficients stored lowest degree first and
// trimmed so that the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  // Parses "x^3-2x+5", "-x", "7", "3*x^2 + 1". Single variable x.
  static IntPoly parse(std::string_view text);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt max_abs_coeff() const;

  // Value at x modulo n (n >= 1), computed in 64-bit arithmetic.
  std::int64_t eval_mod(std::int64_t x, std::int64_t n) const;

  std::string to_string() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Division by a monic polynomial; returns (quotient, remainder).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

// a / b where b divides a exactly in Z[x]; throws std::domain_error otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// n-th cyclotomic polynomial from x^n - 1 = prod_{d | n} Phi_d.
IntPoly cyclotomic_polynomial(unsigned n);

// Resultant via the Sylvester matrix, evaluated exactly over Q.
BigInt resultant(const IntPoly& a, const IntPoly& b);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (zero if both inputs are zero).
IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b);

// Removes the largest power x^k dividing p; returns (p / x^k, k).
std::pair<IntPoly, std::size_t> strip_x_power(const IntPoly& p);

// Elements of Z[x]/Phi_n(x) as reduced coefficient vectors of length phi(n).
class CyclotomicArithmetic {
 public:
  explicit CyclotomicArithmetic(unsigned n);

  unsigned order() const { return n_; }
  std::size_t degree() const { return static_cast<std::size_t>(phi_.degree()); }
  const IntPoly& modulus() const { return phi_; }

  IntPoly reduce(const IntPoly& p) const { return divmod_monic(p, phi_).second; }
  // omega^e reduced, e taken modulo n.
  IntPoly power_of_root(std::int64_t e) const;

 private:
  unsigned n_;
  IntPoly phi_;
};

}  // namespace flab
