#pragma once

#include <cstdint>
#include <vector>

#include "flab/bigint.hpp"

namespace flab::fp {

// Polynomials over F_p, low degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_floor(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod_floor(t, p);
}

inline Poly normalized(Poly a, std::int64_t p) {
  for (auto& c : a) c = mod_floor(c, p);
  trim(a);
  return a;
}

inline Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod_floor(out[i] - b[i], p);
  trim(out);
  return out;
}

inline Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod_floor(out[i] + b[i], p);
  trim(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

inline Poly scale(const Poly& a, std::int64_t s, std::int64_t p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(a[i] * s, p);
  trim(out);
  return out;
}

// a = q b + r with deg r < deg b; b nonzero.
inline void divmod(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const std::int64_t c = (r.back() * lead_inv) % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = mod_floor(r[shift + i] - c * b[i], p);
    trim(r);
  }
  trim(q);
}

inline Poly mod(const Poly& a, const Poly& b, std::int64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

inline Poly monic(const Poly& a, std::int64_t p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

inline std::size_t degree(const Poly& a) { return a.empty() ? 0 : a.size() - 1; }

}  // namespace flab::fp
