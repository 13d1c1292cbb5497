#include "flab/graded_lie/ring.hpp"

#include "flab/errors.hpp"

namespace flab {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

CoefficientRing::CoefficientRing(RingKind kind, BigInt modulus) : kind_(kind), modulus_(std::move(modulus)) {
  if (kind_ == RingKind::Cyclotomic) {
    phi_ = cyclotomic_polynomial(static_cast<unsigned>(modulus_));
    degree_ = static_cast<std::size_t>(phi_.degree());
  }
}

CoefficientRing CoefficientRing::integers() { return {RingKind::Integers, 0}; }

CoefficientRing CoefficientRing::integers_mod(const BigInt& m) {
  if (m < 2) throw InputError("IntegersMod needs a modulus of at least 2");
  return {RingKind::IntegersMod, m};
}

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw InputError("PrimeField needs a prime, got " + std::to_string(p));
  return {RingKind::PrimeField, p};
}

CoefficientRing CoefficientRing::rationals() { return {RingKind::Rationals, 0}; }

CoefficientRing CoefficientRing::cyclotomic(unsigned n) {
  if (n < 1) throw InputError("Cyclotomic needs n >= 1");
  if (n > 720) throw CapacityError("Cyclotomic order is limited to 720");
  return {RingKind::Cyclotomic, n};
}

BigInt CoefficientRing::characteristic() const {
  if (kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField) return modulus_;
  return 0;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Integers";
    case RingKind::IntegersMod: return "IntegersMod(" + modulus_.str() + ")";
    case RingKind::PrimeField: return "PrimeField(" + modulus_.str() + ")";
    case RingKind::Rationals: return "Rationals";
    case RingKind::Cyclotomic: return "Cyclotomic(" + modulus_.str() + ")";
  }
  return "?";
}

ScalarDomain CoefficientRing::domain() const {
  ScalarDomain d;
  d.rational = kind_ == RingKind::Rationals;
  d.modulus = characteristic();
  d.block = degree_;
  if (kind_ == RingKind::Cyclotomic && degree_ > 1) {
    for (std::size_t i = 0; i < degree_; ++i) {
      const IntPoly shifted = divmod_monic(IntPoly::monomial(1, i + 1), phi_).second;
      std::vector<BigInt> row(degree_, BigInt(0));
      for (std::size_t j = 0; j < degree_; ++j) row[j] = shifted.coeff(j);
      d.omega.push_back(std::move(row));
    }
  }
  return d;
}

RingElement CoefficientRing::from_integer(const BigInt& v) const {
  RingElement out = zero();
  out[0] = Rational(v);
  return reduce(std::move(out));
}

RingElement CoefficientRing::from_rational(const Rational& v) const {
  if (kind_ == RingKind::Rationals) return RingElement{v};
  if (is_integral(v)) return from_integer(to_integer(v));
  const BigInt den = boost::multiprecision::denominator(v);
  if (kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField) {
    // Invert the denominator modulo the characteristic when possible.
    BigInt inv;
    const BigInt m = modulus_;
    BigInt a = mod_floor(den, m), b = m, x0 = 1, x1 = 0;
    while (b != 0) {
      const BigInt q = a / b;
      BigInt t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw InputError("denominator " + den.str() + " is not invertible in " + name());
    inv = mod_floor(x0, m);
    return from_integer(boost::multiprecision::numerator(v) * inv);
  }
  throw InputError("non-integral coefficient " + to_string(v) + " in " + name());
}

RingElement CoefficientRing::root() const {
  if (kind_ != RingKind::Cyclotomic) throw PreconditionError(name() + " has no distinguished root of unity");
  const IntPoly w = divmod_monic(IntPoly::monomial(1, 1), phi_).second;
  RingElement out = zero();
  for (std::size_t j = 0; j < degree_; ++j) out[j] = Rational(w.coeff(j));
  return out;
}

RingElement CoefficientRing::reduce(RingElement a) const {
  if (kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField) {
    for (auto& x : a) {
      if (!is_integral(x)) throw std::logic_error("non-integral element of " + name());
      x = Rational(mod_floor(to_integer(x), modulus_));
    }
  }
  return a;
}

RingElement CoefficientRing::add(const RingElement& a, const RingElement& b) const {
  RingElement out = a;
  for (std::size_t i = 0; i < degree_; ++i) out[i] += b[i];
  return reduce(std::move(out));
}

RingElement CoefficientRing::sub(const RingElement& a, const RingElement& b) const {
  RingElement out = a;
  for (std::size_t i = 0; i < degree_; ++i) out[i] -= b[i];
  return reduce(std::move(out));
}

RingElement CoefficientRing::neg(const RingElement& a) const {
  RingElement out = a;
  for (auto& x : out) x = -x;
  return reduce(std::move(out));
}

RingElement CoefficientRing::mul(const RingElement& a, const RingElement& b) const {
  if (kind_ != RingKind::Cyclotomic) return reduce(RingElement{a[0] * b[0]});
  std::vector<BigInt> pa, pb;
  for (const auto& x : a) pa.push_back(to_integer(x));
  for (const auto& x : b) pb.push_back(to_integer(x));
  const IntPoly prod = divmod_monic(IntPoly(pa) * IntPoly(pb), phi_).second;
  RingElement out = zero();
  for (std::size_t j = 0; j < degree_; ++j) out[j] = Rational(prod.coeff(j));
  return out;
}

RingElement CoefficientRing::pow(const RingElement& a, std::uint64_t e) const {
  RingElement result = one();
  RingElement b = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, b);
    e >>= 1U;
    if (e > 0) b = mul(b, b);
  }
  return result;
}

bool CoefficientRing::is_zero(const RingElement& a) const {
  for (const auto& x : reduce(a)) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Vec> CoefficientRing::mult_matrix(const RingElement& a) const {
  std::vector<Vec> rows;
  RingElement cur = a;
  const RingElement w = kind_ == RingKind::Cyclotomic ? root() : one();
  for (std::size_t i = 0; i < degree_; ++i) {
    rows.push_back(cur);
    cur = mul(cur, w);
  }
  return rows;
}

std::string CoefficientRing::format(const RingElement& a) const {
  if (degree_ == 1 && kind_ != RingKind::Cyclotomic) return to_string(a[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += to_string(a[i]);
  }
  return out + "]";
}

}  // namespace flab
