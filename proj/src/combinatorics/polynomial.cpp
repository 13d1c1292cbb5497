#include "flab/combinatorics/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "flab/errors.hpp"

namespace flab {

namespace {

using RatPoly = std::vector<Rational>;

void trim_rat(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim_rat(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim_rat(a);
  }
  return a;
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.empty()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : p) {
    const BigInt d = boost::multiprecision::denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c));
    content = boost::multiprecision::gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPoly(std::move(ints));
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto add_term = [&](const BigInt& c, std::size_t e) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, BigInt(0));
    coeffs[e] += c;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw InputError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt c = 1;
    bool has_coeff = pos > start;
    if (has_coeff) c = BigInt(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) throw InputError("dangling '*' in polynomial");
      ++pos;
    }
    std::size_t e = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es) throw InputError("missing exponent in polynomial");
        e = std::stoul(s.substr(es, pos - es));
      }
    } else if (!has_coeff) {
      throw InputError("malformed polynomial '" + std::string(text) + "'");
    }
    add_term(sign * c, e);
  }
  return IntPoly(std::move(coeffs));
}

BigInt IntPoly::max_abs_coeff() const {
  BigInt m = 0;
  for (const auto& c : coeffs_) m = std::max(m, BigInt(abs(c)));
  return m;
}

std::int64_t IntPoly::eval_mod(std::int64_t x, std::int64_t n) const {
  std::int64_t acc = 0;
  const BigInt nb = n;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto c = static_cast<std::int64_t>(mod_floor(*it, nb));
    acc = static_cast<std::int64_t>((static_cast<__int128>(acc) * x + c) % n);
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (k == 0 || a != 1) out += a.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::domain_error("divmod_monic: divisor must be monic");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = monic.coeffs().size();
  if (rem.size() < db) return {IntPoly{}, a};
  std::vector<BigInt> quot(rem.size() - db + 1, BigInt(0));
  for (std::size_t k = rem.size(); k-- >= db;) {
    const BigInt factor = rem[k];
    if (factor == 0) continue;
    const std::size_t shift = k - (db - 1);
    quot[shift] = factor;
    for (std::size_t i = 0; i < db; ++i) rem[i + shift] -= factor * monic.coeffs()[i];
  }
  rem.resize(db - 1);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t db = b.coeffs().size();
  if (rem.empty()) return {};
  if (rem.size() < db) throw std::domain_error("exact_div: not divisible");
  std::vector<BigInt> quot(rem.size() - db + 1, BigInt(0));
  for (std::size_t k = rem.size(); k-- >= db;) {
    if (rem[k] == 0) continue;
    if (rem[k] % b.leading() != 0) throw std::domain_error("exact_div: not divisible");
    const BigInt factor = rem[k] / b.leading();
    const std::size_t shift = k - (db - 1);
    quot[shift] = factor;
    for (std::size_t i = 0; i < db; ++i) rem[i + shift] -= factor * b.coeffs()[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact_div: not divisible");
  }
  return IntPoly(std::move(quot));
}

IntPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InputError("cyclotomic polynomial of order 0");
  IntPoly p = IntPoly::monomial(1, n) - IntPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
  }
  return p;
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int s = a.degree();
  const int t = b.degree();
  if (s == 0) return big_pow(a.leading(), static_cast<std::uint64_t>(t));
  if (t == 0) return big_pow(b.leading(), static_cast<std::uint64_t>(s));
  const std::size_t size = static_cast<std::size_t>(s + t);
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
  // Rows 0..t-1 carry shifted copies of a, rows t..t+s-1 of b; highest degree first.
  for (int row = 0; row < t; ++row) {
    for (int k = 0; k <= s; ++k) m[row][row + k] = Rational(a.coeff(static_cast<std::size_t>(s - k)));
  }
  for (int row = 0; row < s; ++row) {
    for (int k = 0; k <= t; ++k) m[t + row][row + k] = Rational(b.coeff(static_cast<std::size_t>(t - k)));
  }
  Rational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < size; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return to_integer(det);
}

IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  trim_rat(x);
  trim_rat(y);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

std::pair<IntPoly, std::size_t> strip_x_power(const IntPoly& p) {
  if (p.is_zero()) return {p, 0};
  std::size_t k = 0;
  while (p.coeffs()[k] == 0) ++k;
  return {IntPoly(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end())), k};
}

CyclotomicArithmetic::CyclotomicArithmetic(unsigned n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

IntPoly CyclotomicArithmetic::power_of_root(std::int64_t e) const {
  const auto k = static_cast<std::size_t>(mod_floor(e, static_cast<std::int64_t>(n_)));
  return reduce(IntPoly::monomial(1, k));
}

}  // namespace flab
