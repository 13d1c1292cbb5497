#include "flab/group_engine/module.hpp"

#include <utility>

#include "flab/errors.hpp"
#include "flab/graded_lie/ring.hpp"
#include "fp_poly.hpp"

namespace flab {

namespace {

using PolyMatrix = std::vector<std::vector<fp::Poly>>;

std::size_t rank_mod_p(FpMatrix m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t j = 0; j < cols && r < m.size(); ++j) {
    std::size_t piv = r;
    while (piv < m.size() && mod_floor(m[piv][j], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::int64_t inv = fp::inv_mod(m[r][j], p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = mod_floor(m[i][j] * inv, p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod_floor(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, std::int64_t p) {
  const std::size_t n = a.size();
  FpMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  }
  return c;
}

// Diagonal of the Smith form over F_p[x], monic.
std::vector<fp::Poly> smith_diagonal(PolyMatrix a, std::int64_t p) {
  const std::size_t n = a.size();
  std::vector<fp::Poly> diag;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: nonzero entry of least degree.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j].empty()) continue;
          if (pi == n || a[i][j].size() < a[pi][pj].size()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) {
        for (std::size_t k = t; k < n; ++k) diag.emplace_back();
        return diag;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].empty()) continue;
        fp::Poly q, r;
        fp::divmod(a[i][t], a[t][t], p, q, r);
        for (std::size_t j = t; j < n; ++j) a[i][j] = fp::sub(a[i][j], fp::mul(q, a[t][j], p), p);
        if (!r.empty()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].empty()) continue;
        fp::Poly q, r;
        fp::divmod(a[t][j], a[t][t], p, q, r);
        for (std::size_t i = t; i < n; ++i) a[i][j] = fp::sub(a[i][j], fp::mul(q, a[i][t], p), p);
        if (!r.empty()) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest; otherwise fold the offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!fp::mod(a[i][j], a[t][t], p).empty()) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = fp::add(a[t][k], a[i][k], p);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(fp::monic(a[t][t], p));
  }
  return diag;
}

}  // namespace

FreeModuleResult free_module_check(std::int64_t p, const FpMatrix& matrix, std::int64_t q) {
  if (!is_prime(p)) throw InputError("free_module_check needs a prime p");
  if (q < 1) throw InputError("free_module_check needs q >= 1");
  const std::size_t d = matrix.size();
  FpMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (matrix[i].size() != d) throw InputError("module matrix is not square");
    m[i].resize(d);
    for (std::size_t j = 0; j < d; ++j) m[i][j] = mod_floor(matrix[i][j], p);
  }
  FpMatrix id(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
  FpMatrix pw = id;
  for (std::int64_t i = 0; i < q; ++i) pw = mat_mul(pw, m, p);
  if (pw != id) throw PreconditionError("h^q is not the identity on the module");

  FreeModuleResult out;
  out.dimension = d;
  FpMatrix fixed = m;
  for (std::size_t i = 0; i < d; ++i) fixed[i][i] = mod_floor(fixed[i][i] - 1, p);
  out.fixed_dimension = d - rank_mod_p(fixed, p);

  PolyMatrix a(d, std::vector<fp::Poly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // xI - M^T; the transpose has the same invariant factors.
      fp::Poly e{mod_floor(-m[j][i], p)};
      if (i == j) e.push_back(1);
      a[i][j] = fp::normalized(e, p);
    }
  }
  fp::Poly target(static_cast<std::size_t>(q) + 1, 0);
  target[0] = mod_floor(-1, p);
  target[static_cast<std::size_t>(q)] = 1;
  target = fp::normalized(target, p);
  out.free = true;
  for (const auto& f : smith_diagonal(a, p)) {
    if (f.size() == 1) continue;  // unit
    out.invariant_factors.push_back(f);
    if (f != target) out.free = false;
  }
  if (out.free) out.rank = d / static_cast<std::size_t>(q);
  out.dimension_equation = out.fixed_dimension * static_cast<std::size_t>(q) == d;
  return out;
}

ElementaryCoordinates elementary_coordinates(const FiniteGroup& G) {
  Subgroup all = whole_group(G);
  auto p = p_group_prime(all);
  if (!p) throw InputError("group is not a p-group");
  ElementaryCoordinates c;
  c.p = *p == 1 ? 2 : *p;
  if (!is_abelian(G, all) || exponent(G, all) > static_cast<std::size_t>(c.p)) {
    throw InputError("group is not elementary abelian");
  }
  Subgroup acc = trivial_subgroup(G);
  for (Elem x = 0; x < G.order(); ++x) {
    if (acc.contains(x)) continue;
    c.basis.push_back(x);
    acc = generate(G, c.basis);
  }
  const std::size_t d = c.basis.size();
  c.coords.assign(G.order(), std::vector<std::int64_t>(d, 0));
  // Enumerate all combinations sum a_i b_i.
  std::vector<std::int64_t> digits(d, 0);
  while (true) {
    Elem x = G.identity();
    for (std::size_t i = 0; i < d; ++i) x = G.mul(x, G.pow(c.basis[i], digits[i]));
    c.coords[x] = digits;
    std::size_t i = 0;
    while (i < d && ++digits[i] == c.p) digits[i++] = 0;
    if (i == d) break;
  }
  return c;
}

FpMatrix automorphism_matrix(const ElementaryCoordinates& c, const GroupAutomorphism& a) {
  FpMatrix m;
  for (Elem b : c.basis) m.push_back(c.coords[a(b)]);
  return m;
}

}  // namespace flab
