#include "flab/graded_lie/operations.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "flab/errors.hpp"

namespace flab {

namespace {

std::size_t series_cap(const GradedLieRing& L) {
  const std::size_t n = L.base_dim();
  const BigInt m = L.domain().modulus;
  if (L.domain().rational || m == 0) return n + 2;
  std::size_t bits = 0;
  for (BigInt x = m - 1; x > 0; x >>= 1) ++bits;
  return n * bits + 2;
}

bool rationally_stable(const Submodule& prev, const Submodule& next) {
  return !prev.domain().finite() && next.rational_rank() == prev.rational_rank();
}

template <typename Step>
SubringChain run_series(const GradedLieRing& L, const Submodule& start, Step step) {
  SubringChain chain;
  chain.terms.push_back(start);
  const std::size_t cap = series_cap(L);
  while (true) {
    const Submodule& last = chain.terms.back();
    if (last.is_zero()) {
      chain.reaches_zero = true;
      break;
    }
    Submodule next = step(last);
    if (next == last || rationally_stable(last, next)) break;
    chain.terms.push_back(std::move(next));
    if (chain.terms.size() > cap) throw std::logic_error("series failed to stabilize within the iteration cap");
  }
  return chain;
}

Vec concat_images(const std::vector<Vec>& parts) {
  Vec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Solves x * A = b for square invertible A over Q.
Vec solve_row_system(Mat a, Vec b) {
  const std::size_t n = a.size();
  // Transpose to A^T x^T = b^T and run Gauss-Jordan.
  Mat t(n, Vec(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) t[j][n] = b[j];
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && t[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Vandermonde system");
    std::swap(t[piv], t[col]);
    const Rational inv = 1 / t[col][col];
    for (auto& x : t[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || t[r][col] == 0) continue;
      const Rational f = t[r][col];
      for (std::size_t k = col; k <= n; ++k) t[r][k] -= f * t[col][k];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = t[i][n];
  return x;
}

}  // namespace

std::optional<std::size_t> SubringChain::length() const {
  if (!reaches_zero) return std::nullopt;
  return terms.size() - 1;
}

LieValidation validate(const GradedLieRing& L) {
  LieValidation out;
  const auto& R = L.ring();
  const std::size_t rank = L.rank();
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      for (std::size_t k = 0; k < rank; ++k) {
        if (!R.is_zero(R.add(L.constant(i, j)[k], L.constant(j, i)[k]))) {
          return {false, "antisymmetry", {i, j}};
        }
      }
    }
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t k = 0; k < rank; ++k) {
      if (!R.is_zero(L.constant(i, i)[k])) return {false, "self-bracket", {i}};
    }
  }
  const std::size_t d = R.degree();
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      for (std::size_t k = j + 1; k < rank; ++k) {
        const Vec a = L.base_unit(i * d), b = L.base_unit(j * d), c = L.base_unit(k * d);
        Vec sum = vec_add(L.bracket(L.bracket(a, b), c), L.bracket(L.bracket(b, c), a));
        sum = vec_add(sum, L.bracket(L.bracket(c, a), b));
        if (!is_zero_vec(L.domain().reduce(sum))) return {false, "jacobi", {i, j, k}};
      }
    }
  }
  if (L.grading()) {
    const auto& g = *L.grading();
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        for (std::size_t k = 0; k < rank; ++k) {
          if (R.is_zero(L.constant(i, j)[k])) continue;
          std::int64_t expected = g.degrees[i] + g.degrees[j];
          std::int64_t actual = g.degrees[k];
          if (g.modulus > 0) {
            expected = mod_floor(expected, g.modulus);
            actual = mod_floor(actual, g.modulus);
          }
          if (expected != actual) return {false, "grading", {i, j, k}};
        }
      }
    }
  }
  return out;
}

SubringChain lower_central_series(const GradedLieRing& L) {
  const Submodule whole = L.whole();
  return run_series(L, whole, [&](const Submodule& last) { return L.bracket(last, whole); });
}

SubringChain lower_central_series(const GradedLieRing& L, const Submodule& K) {
  return run_series(L, K, [&](const Submodule& last) { return L.bracket(last, K); });
}

SubringChain derived_series(const GradedLieRing& L) {
  return run_series(L, L.whole(), [&](const Submodule& last) { return L.bracket(last, last); });
}

Submodule centralizer(const GradedLieRing& L, const std::vector<Vec>& S) {
  if (S.empty()) return L.whole();
  const std::size_t n = L.base_dim();
  Mat images;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Vec> parts;
    for (const auto& s : S) parts.push_back(L.bracket(L.base_unit(u), s));
    images.push_back(concat_images(parts));
  }
  return kernel(L.domain(), n, images, n * S.size());
}

Submodule fixed_subring(const GradedLieRing& L, const std::vector<LieAutomorphism>& A) {
  if (A.empty()) return L.whole();
  const std::size_t n = L.base_dim();
  Mat images;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Vec> parts;
    for (const auto& phi : A) {
      Vec diff = phi.matrix[u];
      diff[u] -= 1;
      parts.push_back(L.domain().reduce(std::move(diff)));
    }
    images.push_back(concat_images(parts));
  }
  return kernel(L.domain(), n, images, n * A.size());
}

bool is_ideal(const GradedLieRing& L, const Submodule& K) { return K.contains(L.bracket(K, L.whole())); }

SelectiveResult check_selective_nilpotency(const GradedLieRing& L, std::int64_t c, const FrobeniusParams& params) {
  params.check_well_formed();
  if (c < 0) throw InputError("c must be non-negative");
  if (!L.grading()) throw PreconditionError("selective nilpotency needs a graded ring");
  const Grading& g = *L.grading();
  if (g.modulus != params.n) {
    throw PreconditionError("grading modulus " + std::to_string(g.modulus) + " differs from n = " +
                            std::to_string(params.n));
  }
  std::map<std::int64_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < L.rank(); ++i) {
    const std::int64_t deg = mod_floor(g.degrees[i], params.n);
    if (deg == 0) throw PreconditionError("L_0 is nonzero (basis vector " + std::to_string(i) + ")");
    components[deg].push_back(i);
  }
  const std::size_t length = static_cast<std::size_t>(c) + 1;
  const std::size_t d = L.ring().degree();

  struct Partial {
    Vec value;
    std::vector<std::size_t> choice;
  };
  SelectiveResult result;
  std::vector<std::int64_t> tuple;
  auto rec = [&](auto&& self, const std::vector<Partial>& current) -> bool {
    if (tuple.size() == length) {
      result.holds = false;
      result.grade_tuple = tuple;
      result.basis_choice = current.front().choice;
      return true;
    }
    for (const auto& [deg, basis] : components) {
      tuple.push_back(deg);
      // A dependent prefix makes every extension dependent.
      if (!is_r_dependent(tuple, params, length)) {
        std::vector<Partial> next;
        for (std::size_t b : basis) {
          const Vec e = L.base_unit(b * d);
          if (current.empty() && tuple.size() == 1) {
            next.push_back({e, {b}});
            continue;
          }
          for (const auto& p : current) {
            Vec v = L.bracket(p.value, e);
            if (is_zero_vec(v)) continue;
            auto choice = p.choice;
            choice.push_back(b);
            next.push_back({std::move(v), std::move(choice)});
          }
        }
        if (!next.empty() && self(self, next)) return true;
      }
      tuple.pop_back();
    }
    return false;
  };
  rec(rec, {});
  return result;
}

std::optional<std::int64_t> ring_order(const CoefficientRing& ring, const RingElement& a, std::int64_t limit) {
  RingElement cur = ring.reduce(a);
  const RingElement one = ring.one();
  for (std::int64_t k = 1; k <= limit; ++k) {
    if (ring.equal(cur, one)) return k;
    cur = ring.mul(cur, a);
  }
  return std::nullopt;
}

EigenDecomposition eigenspace_decomposition(const GradedLieRing& L, const LieAutomorphism& phi, std::int64_t n,
                                            const RingElement& omega) {
  if (n < 1) throw InputError("n must be positive");
  if (n > 4096) throw CapacityError("eigenspace decomposition is limited to n <= 4096");
  const auto& R = L.ring();
  if (omega.size() != R.degree()) throw InputError("root of unity has wrong length");
  const auto ord = ring_order(R, omega, n);
  if (!ord || *ord != n) {
    throw InputError("the supplied root does not have multiplicative order " + std::to_string(n));
  }
  if (!is_identity(L, power(L, phi, static_cast<std::uint64_t>(n)))) {
    throw PreconditionError("phi^" + std::to_string(n) + " is not the identity");
  }
  const std::size_t dim = L.base_dim();
  EigenDecomposition out;
  RingElement w_i = R.one();
  for (std::int64_t i = 0; i < n; ++i) {
    const Mat s = L.scalar_matrix(w_i);
    Mat diff = phi.matrix;
    for (std::size_t u = 0; u < dim; ++u) {
      for (std::size_t v = 0; v < dim; ++v) diff[u][v] -= s[u][v];
      diff[u] = L.domain().reduce(std::move(diff[u]));
    }
    out.components.push_back(kernel(L.domain(), dim, diff, dim));
    w_i = R.mul(w_i, omega);
  }
  Submodule sum = L.zero_submodule();
  for (const auto& c : out.components) sum = sum.join(c);
  out.spans = sum == L.whole();
  if (L.domain().finite()) {
    BigInt prod = 1;
    for (const auto& c : out.components) prod *= *c.order();
    out.direct = out.spans && prod == *sum.order();
  } else {
    std::size_t total = 0;
    for (const auto& c : out.components) total += c.rank();
    out.direct = out.spans && total == sum.rank();
  }
  out.n_multiple_in_sum = true;
  for (std::size_t u = 0; u < dim; ++u) {
    if (!sum.contains(vec_scale(L.base_unit(u), Rational(n)))) out.n_multiple_in_sum = false;
  }
  // Dependencies: kernel of the coefficient map onto the generators.
  std::vector<Vec> gens;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    for (auto& g : out.components[i].generators()) {
      gens.push_back(std::move(g));
      owner.push_back(i);
    }
  }
  out.dependencies_annihilated = true;
  if (!gens.empty()) {
    ScalarDomain flat = L.domain();
    flat.omega.clear();
    flat.block = 1;
    const Submodule deps = kernel(flat, gens.size(), gens, dim);
    for (const auto& coeffs : deps.generators()) {
      std::vector<Vec> parts(out.components.size(), Vec(dim, Rational(0)));
      for (std::size_t t = 0; t < gens.size(); ++t) {
        if (coeffs[t] != 0) parts[owner[t]] = vec_add(parts[owner[t]], vec_scale(gens[t], coeffs[t]));
      }
      for (const auto& p : parts) {
        if (!is_zero_vec(L.domain().reduce(vec_scale(p, Rational(n))))) out.dependencies_annihilated = false;
      }
    }
  }
  return out;
}

std::int64_t hall_class_bound(std::int64_t c, std::int64_t k) {
  if (c < 1 || k < 1) throw InputError("hall_class_bound needs c >= 1 and k >= 1");
  return c * (k * (k + 1) / 2) - k * (k - 1) / 2;
}

HallImplication verify_hall_implication(const GradedLieRing& L, const Submodule& K) {
  if (!is_ideal(L, K)) throw PreconditionError("K is not an ideal of L");
  HallImplication out;
  const SubringChain k_chain = lower_central_series(L, K);
  if (!k_chain.reaches_zero) {
    out.reason = "K is not nilpotent";
    return out;
  }
  out.k = std::max<std::int64_t>(1, static_cast<std::int64_t>(k_chain.terms.size()) - 1);
  const Submodule kk = L.bracket(K, K);
  const Submodule whole = L.whole();
  Submodule cur = whole;
  const std::size_t limit = series_cap(L) + 32;
  for (std::size_t c = 1; c <= limit; ++c) {
    cur = L.bracket(cur, whole);
    if (kk.contains(cur)) {
      out.c = static_cast<std::int64_t>(c);
      break;
    }
  }
  if (out.c == 0) {
    out.reason = "no c with gamma_{c+1}(L) inside [K,K]";
    return out;
  }
  out.applicable = true;
  out.bound = hall_class_bound(out.c, out.k);
  const SubringChain chain = lower_central_series(L);
  out.nilpotency_class = chain.length();
  out.holds = chain.reaches_zero && static_cast<std::int64_t>(*out.nilpotency_class) <= out.bound;
  return out;
}

bool check_scaled_nilpotency(const GradedLieRing& L, std::int64_t n, std::int64_t u, std::int64_t v) {
  if (u < 0 || v < 0) throw InputError("u and v must be non-negative");
  const Rational scale(big_pow(n, static_cast<std::uint64_t>(u)));
  std::vector<Vec> gens;
  for (std::size_t b = 0; b < L.base_dim(); ++b) gens.push_back(vec_scale(L.base_unit(b), scale));
  const Submodule M = L.span(gens);
  Submodule cur = M;
  for (std::int64_t i = 0; i < v && !cur.is_zero(); ++i) cur = L.bracket(cur, M);
  return cur.is_zero();
}

std::optional<std::int64_t> ad_nilpotency_index(const GradedLieRing& L, const Vec& y) {
  const std::size_t dim = L.base_dim();
  Mat ad;
  for (std::size_t u = 0; u < dim; ++u) ad.push_back(L.bracket(L.base_unit(u), y));
  const std::size_t cap = series_cap(L);
  Mat p = ad;
  for (std::size_t t = 1; t <= cap; ++t) {
    bool zero = true;
    for (const auto& row : p) zero = zero && is_zero_vec(row);
    if (zero) return static_cast<std::int64_t>(t);
    p = mat_mul(p, ad, dim);
    for (auto& row : p) row = L.domain().reduce(std::move(row));
  }
  return std::nullopt;
}

std::vector<VandermondeCoefficients> vandermonde_extract(const GradedLieRing& L, const LieAutomorphism& phi,
                                                         std::int64_t n,
                                                         const std::vector<std::pair<std::int64_t, Vec>>& components) {
  const auto& R = L.ring();
  if (R.kind() != RingKind::Cyclotomic || R.modulus() != n) {
    throw PreconditionError("vandermonde_extract needs the ring Cyclotomic(" + std::to_string(n) + ")");
  }
  if (components.empty()) throw InputError("no components given");
  std::set<std::int64_t> seen;
  for (const auto& [k, y] : components) {
    if (k < 0 || k >= n) throw InputError("component index out of range");
    if (!seen.insert(k).second) throw InputError("repeated component index " + std::to_string(k));
    if (y.size() != L.base_dim()) throw InputError("component element has wrong length");
  }
  const std::size_t m = components.size();
  const std::size_t d = R.degree();
  const std::size_t dim = L.base_dim();

  Vec z(dim, Rational(0));
  for (const auto& [k, y] : components) z = vec_add(z, y);
  std::vector<Vec> z_powers{z};
  for (std::size_t j = 1; j < m; ++j) z_powers.push_back(apply(L, phi, z_powers.back()));

  const RingElement w = R.root();
  // Rows (j, a), columns (i, b): coefficient of w^b in w^a * w^(j k_i).
  Mat system(m * d, Vec(m * d, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto e = static_cast<std::uint64_t>(static_cast<std::int64_t>(j) * components[i].first);
      const auto mm = R.mult_matrix(R.pow(w, e % static_cast<std::uint64_t>(n)));
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) system[j * d + a][i * d + b] = mm[a][b];
      }
    }
  }
  std::vector<VandermondeCoefficients> out;
  for (std::size_t s = 0; s < m; ++s) {
    Vec rhs(m * d, Rational(0));
    rhs[s * d] = 1;
    const Vec mu = solve_row_system(system, rhs);
    VandermondeCoefficients res;
    res.s = s;
    Rational scale = 1;
    while (true) {
      bool integral = true;
      for (const auto& x : mu) integral = integral && is_integral(x * scale);
      if (integral) break;
      scale *= n;
      ++res.l0;
      if (res.l0 > 256) throw std::logic_error("Vandermonde denominators are not powers of n");
    }
    for (std::size_t j = 0; j < m; ++j) {
      RingElement lam(d);
      for (std::size_t a = 0; a < d; ++a) lam[a] = mu[j * d + a] * scale;
      res.lambda.push_back(std::move(lam));
    }
    Vec rhs_vec(dim, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      rhs_vec = vec_add(rhs_vec, vec_mul_mat(z_powers[j], L.scalar_matrix(res.lambda[j]), dim));
    }
    const Vec lhs = vec_scale(components[s].second, scale);
    res.verified = L.domain().reduce(lhs) == L.domain().reduce(rhs_vec);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace flab
