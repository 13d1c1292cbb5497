#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/bigint.hpp"
#include "flab/combinatorics/polynomial.hpp"
#include "flab/graded_lie/submodule.hpp"

namespace flab {

enum class RingKind { Integers, IntegersMod, PrimeField, Rationals, Cyclotomic };

// Coordinates in the power basis 1, w, ..., w^(d-1); length 1 except for
// cyclotomic rings.
using RingElement = std::vector<Rational>;

class CoefficientRing {
 public:
  static CoefficientRing integers();
  static CoefficientRing integers_mod(const BigInt& m);
  static CoefficientRing prime_field(std::int64_t p);
  static CoefficientRing rationals();
  static CoefficientRing cyclotomic(unsigned n);

  RingKind kind() const { return kind_; }
  // m for Z/m, p for F_p, n for Z[w] with w of order n, 0 otherwise.
  const BigInt& modulus() const { return modulus_; }
  std::size_t degree() const { return degree_; }
  BigInt characteristic() const;
  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  std::string name() const;
  ScalarDomain domain() const;

  RingElement zero() const { return RingElement(degree_, Rational(0)); }
  RingElement one() const { return from_integer(1); }
  RingElement from_integer(const BigInt& v) const;
  RingElement from_rational(const Rational& v) const;
  // The distinguished root of unity of Z[w].
  RingElement root() const;

  RingElement reduce(RingElement a) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, std::uint64_t e) const;
  bool is_zero(const RingElement& a) const;
  bool equal(const RingElement& a, const RingElement& b) const { return is_zero(sub(a, b)); }

  // Row i holds the coordinates of w^i * a: the matrix of multiplication
  // by a on the power basis.
  std::vector<Vec> mult_matrix(const RingElement& a) const;

  std::string format(const RingElement& a) const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientRing(RingKind kind, BigInt modulus);

  RingKind kind_ = RingKind::Integers;
  BigInt modulus_ = 0;
  std::size_t degree_ = 1;
  IntPoly phi_;
};

bool is_prime(std::int64_t p);

}  // namespace flab
