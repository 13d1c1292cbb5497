#include "flab/combinatorics/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "flab/errors.hpp"

namespace flab {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::vector<std::int64_t> reduce_entries(const std::vector<std::int64_t>& seq, std::int64_t n) {
  std::vector<std::int64_t> out;
  out.reserve(seq.size());
  for (auto a : seq) {
    const auto v = mod_floor(a, n);
    if (v == 0) throw InputError("index " + std::to_string(a) + " is zero modulo " + std::to_string(n));
    out.push_back(v);
  }
  return out;
}

// Distinct values of sum (r^a_i - 1) s_i over all exponent tuples,
// tracked together with whether some exponent was nonzero.
struct SumTable {
  std::int64_t n;
  // layers[i][2 * s + flag]: suffix starting at i reaches (s, flag).
  std::vector<std::vector<char>> layers;
};

SumTable build_suffix_table(const std::vector<std::int64_t>& seq, const FrobeniusParams& p) {
  const std::size_t k = seq.size();
  SumTable t{p.n, std::vector<std::vector<char>>(k + 1, std::vector<char>(2 * p.n, 0))};
  t.layers[k][0] = 1;
  for (std::size_t i = k; i-- > 0;) {
    for (std::int64_t alpha = 0; alpha < p.q; ++alpha) {
      const std::int64_t term = mul_mod(mod_floor(power_mod(p.r, alpha, p.n) - 1, p.n), seq[i], p.n);
      const int bump = alpha != 0 ? 1 : 0;
      for (std::int64_t s = 0; s < p.n; ++s) {
        for (int flag = 0; flag < 2; ++flag) {
          if (!t.layers[i + 1][2 * s + flag]) continue;
          t.layers[i][2 * ((s + term) % p.n) + (flag | bump)] = 1;
        }
      }
    }
  }
  return t;
}

std::set<std::int64_t> reachable_sums(const std::vector<std::int64_t>& seq, const FrobeniusParams& p) {
  std::set<std::int64_t> sums{0};
  for (auto a : seq) {
    std::set<std::int64_t> next;
    for (std::int64_t alpha = 0; alpha < p.q; ++alpha) {
      const std::int64_t term = mul_mod(mod_floor(power_mod(p.r, alpha, p.n) - 1, p.n), a, p.n);
      for (auto s : sums) next.insert((s + term) % p.n);
    }
    sums = std::move(next);
  }
  return sums;
}

}  // namespace

void FrobeniusParams::check_well_formed() const {
  if (n < 1) throw InputError("n must be positive");
  if (q < 1) throw InputError("q must be positive");
  if (r < 1 || r > n - 1) {
    throw InputError("r = " + std::to_string(r) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod_floor(base, mod);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, mod);
    b = mul_mod(b, b, mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t multiplicative_order(std::int64_t r, std::int64_t d) {
  if (d == 1) return 1;
  if (std::gcd(mod_floor(r, d), d) != 1) return 0;
  std::int64_t x = mod_floor(r, d);
  std::int64_t k = 1;
  while (x != 1) {
    x = mul_mod(x, r, d);
    ++k;
  }
  return k;
}

std::optional<std::int64_t> prim_violation(std::int64_t n, std::int64_t q, std::int64_t r) {
  FrobeniusParams{n, q, r}.check_well_formed();
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (multiplicative_order(r, d) != q) return d;
  }
  return std::nullopt;
}

bool check_prim(std::int64_t n, std::int64_t q, std::int64_t r) {
  FrobeniusParams{n, q, r}.check_well_formed();
  // r^q = 1 mod n, and for every prime l | q, r^(q/l) - 1 is a unit mod n,
  // is the same as "order q modulo every divisor d > 1".
  if (power_mod(r, q, n) != 1 % n) return false;
  std::int64_t rest = q;
  for (std::int64_t l = 2; l <= rest; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    const std::int64_t v = mod_floor(power_mod(r, q / l, n) - 1, n);
    if (std::gcd(v, n) != 1) return false;
  }
  return true;
}

bool check_prim(const FrobeniusParams& params) { return check_prim(params.n, params.q, params.r); }

std::int64_t additive_order(std::int64_t b, std::int64_t n) {
  if (n < 1) throw InputError("modulus must be positive");
  return n / std::gcd(mod_floor(b, n), n);
}

DependenceResult find_dependence(const std::vector<std::int64_t>& seq, const FrobeniusParams& params,
                                 std::size_t max_length) {
  params.check_well_formed();
  if (seq.size() > max_length) {
    throw CapacityError("dependence search over " + std::to_string(seq.size()) + " entries exceeds cap " +
                        std::to_string(max_length));
  }
  const auto a = reduce_entries(seq, params.n);
  const SumTable table = build_suffix_table(a, params);
  DependenceResult result;
  if (!table.layers[0][1]) return result;
  // Walk forward choosing the least exponent that keeps (need, flag) reachable.
  result.dependent = true;
  std::int64_t need = 0;
  int need_flag = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::int64_t alpha = 0; alpha < params.q; ++alpha) {
      const std::int64_t term = mul_mod(mod_floor(power_mod(params.r, alpha, params.n) - 1, params.n), a[i], params.n);
      const std::int64_t rest = mod_floor(need - term, params.n);
      // The suffix still owes a nonzero exponent unless this one is nonzero.
      const int owed = (need_flag != 0 && alpha == 0) ? 1 : 0;
      const bool ok = table.layers[i + 1][2 * rest + 1] != 0 || (owed == 0 && table.layers[i + 1][2 * rest] != 0);
      if (ok) {
        result.exponents.push_back(alpha);
        need = rest;
        need_flag = owed;
        break;
      }
    }
  }
  return result;
}

bool is_r_dependent(const std::vector<std::int64_t>& seq, const FrobeniusParams& params, std::size_t max_length) {
  return find_dependence(seq, params, max_length).dependent;
}

std::set<std::int64_t> d_set(const std::vector<std::int64_t>& seq, const FrobeniusParams& params) {
  params.check_well_formed();
  const auto a = reduce_entries(seq, params.n);
  if (is_r_dependent(a, params, std::max(a.size(), kDefaultDependenceLength))) {
    throw PreconditionError("d_set requires an r-independent sequence");
  }
  const auto sums = reachable_sums(a, params);
  std::set<std::int64_t> out;
  const std::int64_t n = params.n;
  // (r^alpha - 1) j + s = 0 with alpha != 0 on the appended entry.
  for (std::int64_t alpha = 1; alpha < params.q; ++alpha) {
    const std::int64_t t = mod_floor(power_mod(params.r, alpha, n) - 1, n);
    const std::int64_t g = std::gcd(t, n);
    const std::int64_t step = n / g;
    for (auto s : sums) {
      const std::int64_t target = mod_floor(-s, n);
      if (target % g != 0) continue;
      // Solve (t/g) j = target/g mod n/g.
      const std::int64_t tg = t / g;
      const std::int64_t mg = step;
      std::int64_t j0 = 0;
      if (mg > 1) {
        const std::int64_t inv = power_mod(tg, multiplicative_order(tg, mg) - 1, mg);
        j0 = mul_mod(inv, (target / g) % mg, mg);
      }
      for (std::int64_t j = j0; j < n; j += step) {
        if (j != 0) out.insert(j);
      }
    }
  }
  return out;
}

std::optional<std::vector<std::int64_t>> find_independent_subseq(const std::vector<std::int64_t>& seq,
                                                                 std::int64_t m,
                                                                 const FrobeniusParams& params) {
  params.check_well_formed();
  if (m < 1) throw InputError("subsequence length must be at least 1");
  const auto a = reduce_entries(seq, params.n);
  if (a.empty()) return std::nullopt;
  if (m == 1) return std::vector<std::int64_t>{seq.front()};
  const std::set<std::int64_t> distinct(a.begin(), a.end());
  const BigInt needed = big_pow(params.q, static_cast<std::uint64_t>(m)) + m;
  if (BigInt(distinct.size()) < needed) return std::nullopt;
  std::vector<std::int64_t> chosen{seq.front()};
  std::vector<std::int64_t> chosen_reduced{a.front()};
  for (std::size_t i = 1; i < a.size() && static_cast<std::int64_t>(chosen.size()) < m; ++i) {
    // D-sets only grow as the sequence is extended, so a value rejected
    // once never needs to be reconsidered.
    const auto d = d_set(chosen_reduced, params);
    if (d.count(a[i]) != 0) continue;
    chosen.push_back(seq[i]);
    chosen_reduced.push_back(a[i]);
  }
  if (static_cast<std::int64_t>(chosen.size()) < m) return std::nullopt;
  return chosen;
}

BigInt capacity_N(std::int64_t c, std::int64_t q) {
  if (c < 1) throw InputError("c must be at least 1");
  if (q < 2) throw InputError("q must be at least 2");
  if (q > 10) throw CapacityError("capacity_N is limited to q <= 10");
  const std::uint64_t e = std::uint64_t{1} << static_cast<unsigned>(2 * q - 3);
  const BigInt first = big_pow(2, e - 1) * big_pow(c, e);
  const BigInt second = big_pow(q, static_cast<std::uint64_t>(c + 1));
  return std::max(first, second);
}

BigInt engel_width_w(std::int64_t c, std::int64_t q) {
  if (c < 1) throw InputError("c must be at least 1");
  if (q < 2) throw InputError("q must be at least 2");
  if (c > 100000) throw CapacityError("engel_width_w is limited to c <= 100000");
  return BigInt(c) + big_pow(q, static_cast<std::uint64_t>(c + 1));
}

BigInt charp_bound(const IntPoly& g1, const IntPoly& g2) {
  if (g1.is_zero() && g2.is_zero()) throw InputError("charp_bound needs a nonzero polynomial");
  const BigInt m = std::max(g1.max_abs_coeff(), g2.max_abs_coeff());
  const int s = std::max(g1.degree(), 0);
  const int t = std::max(g2.degree(), 0);
  // A nonzero constant c only has common roots modulo divisors of c.
  if (s == 0 || t == 0) return m;
  if (s + t - 1 > 20) throw CapacityError("charp_bound is limited to s + t <= 21");
  const std::uint64_t e = std::uint64_t{1} << static_cast<unsigned>(s + t - 1);
  return big_pow(2, e - 1) * big_pow(m, e);
}

std::vector<std::int64_t> common_root_moduli(const IntPoly& g1, const IntPoly& g2, std::int64_t limit) {
  if (limit < 2) throw InputError("limit must be at least 2");
  if (limit > 10000000) throw CapacityError("common_root_moduli is limited to limit <= 10^7");

  auto reduced = [](const IntPoly& g, std::int64_t mod) {
    std::vector<std::int64_t> c;
    for (const auto& v : g.coeffs()) c.push_back(static_cast<std::int64_t>(mod_floor(v, BigInt(mod))));
    return c;
  };
  auto eval = [](const std::vector<std::int64_t>& c, std::int64_t x, std::int64_t mod) {
    std::int64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mul_mod(acc, x, mod) + *it) % mod;
    return acc;
  };

  // For each prime power p^e <= limit: does a common root exist, and does a
  // nonzero one exist. Roots mod p^e lift roots mod p^(e-1).
  struct Local {
    bool any = false;
    bool nonzero = false;
  };
  std::map<std::int64_t, Local> local;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::int64_t k = p * p; k <= limit; k += p) composite[k] = 1;
    std::vector<std::int64_t> roots;
    for (std::int64_t pe = p, prev = 1; pe <= limit; prev = pe, pe *= p) {
      const auto c1 = reduced(g1, pe);
      const auto c2 = reduced(g2, pe);
      std::vector<std::int64_t> next;
      if (prev == 1) {
        for (std::int64_t x = 0; x < p; ++x) {
          if (eval(c1, x, pe) == 0 && eval(c2, x, pe) == 0) next.push_back(x);
        }
      } else {
        for (auto x0 : roots) {
          for (std::int64_t k = 0; k < p; ++k) {
            const std::int64_t x = x0 + k * prev;
            if (eval(c1, x, pe) == 0 && eval(c2, x, pe) == 0) next.push_back(x);
          }
        }
      }
      roots = std::move(next);
      Local info;
      info.any = !roots.empty();
      info.nonzero = std::any_of(roots.begin(), roots.end(), [](std::int64_t x) { return x != 0; });
      local[pe] = info;
      if (roots.empty()) break;
      if (pe > limit / p) break;
    }
  }

  std::vector<std::int64_t> out;
  for (std::int64_t n0 = 2; n0 <= limit; ++n0) {
    std::int64_t rest = n0;
    bool any = true;
    bool nonzero = false;
    for (std::int64_t p = 2; p * p <= rest && any; ++p) {
      if (rest % p != 0) continue;
      std::int64_t pe = 1;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
      }
      auto it = local.find(pe);
      if (it == local.end() || !it->second.any) any = false;
      else nonzero = nonzero || it->second.nonzero;
    }
    if (any && rest > 1) {
      auto it = local.find(rest);
      if (it == local.end() || !it->second.any) any = false;
      else nonzero = nonzero || it->second.nonzero;
    }
    if (any && nonzero) out.push_back(n0);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> char0_exhaust(std::int64_t n, std::int64_t m) {
  if (n < 1) throw InputError("n must be positive");
  if (m < 1) throw InputError("m must be positive");
  if (m > kMaxChar0Terms) throw CapacityError("char0_exhaust is limited to m <= 6");
  if (n > 1000) throw CapacityError("char0_exhaust is limited to n <= 1000");
  const CyclotomicArithmetic ring(static_cast<unsigned>(n));
  const std::size_t dim = ring.degree();
  std::vector<std::vector<std::int64_t>> powers;
  for (std::int64_t i = 0; i < n; ++i) {
    const IntPoly w = ring.power_of_root(i);
    std::vector<std::int64_t> v(dim, 0);
    for (std::size_t k = 0; k < dim; ++k) v[k] = static_cast<std::int64_t>(w.coeff(k));
    powers.push_back(std::move(v));
  }
  std::vector<std::int64_t> target(dim, 0);
  target[0] = m;

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> acc(dim, 0);
  // Depth-first over nondecreasing tuples with a running sum.
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t start) -> void {
    if (pos == idx.size()) {
      if (acc == target) out.push_back(idx);
      return;
    }
    for (std::int64_t i = start; i < n; ++i) {
      idx[pos] = i;
      for (std::size_t k = 0; k < dim; ++k) acc[k] += powers[i][k];
      self(self, pos + 1, i);
      for (std::size_t k = 0; k < dim; ++k) acc[k] -= powers[i][k];
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace flab
