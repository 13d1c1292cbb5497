#include "flab/graded_lie/submodule.hpp"

#include <stdexcept>

namespace flab {

namespace {

using IRow = std::vector<BigInt>;

struct Xgcd {
  BigInt g, s, t;
};

Xgcd xgcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

bool is_zero_row(const IRow& r) {
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t leading(const IRow& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return j;
  }
  return r.size();
}

IRow to_irow(const Vec& v) {
  IRow out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw std::logic_error("non-integral coordinate in a lattice computation");
    out.push_back(to_integer(x));
  }
  return out;
}

Vec to_vec(const IRow& r) {
  Vec out;
  out.reserve(r.size());
  for (const auto& x : r) out.emplace_back(x);
  return out;
}

// Hermite normal form of the lattice spanned by pool (plus m Z^dim when
// m > 0). Pivots are positive and entries above a pivot lie in [0, pivot).
// With m > 0 every column has a pivot dividing m.
std::vector<IRow> hermite(std::vector<IRow> pool, std::size_t dim, const BigInt& m) {
  auto reduce_from = [&](IRow& r, std::size_t from) {
    if (m == 0) return;
    for (std::size_t j = from; j < dim; ++j) r[j] = mod_floor(r[j], m);
  };
  for (auto& r : pool) reduce_from(r, 0);
  std::vector<IRow> result;
  for (std::size_t col = 0; col < dim; ++col) {
    // Rows for m e_j with j > col are implicit, which is what makes the
    // reductions modulo m past the current column legitimate.
    std::optional<IRow> pivot;
    if (m > 0) {
      pivot = IRow(dim, BigInt(0));
      (*pivot)[col] = m;
    }
    std::vector<IRow> rest;
    for (auto& r : pool) {
      if (is_zero_row(r)) continue;
      if (r[col] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!pivot) {
        pivot = std::move(r);
        continue;
      }
      const BigInt a = (*pivot)[col];
      const BigInt b = r[col];
      const Xgcd e = xgcd(a, b);
      const BigInt ag = a / e.g;
      const BigInt bg = b / e.g;
      IRow p2(dim), r2(dim);
      for (std::size_t j = col; j < dim; ++j) {
        p2[j] = e.s * (*pivot)[j] + e.t * r[j];
        r2[j] = ag * r[j] - bg * (*pivot)[j];
      }
      *pivot = std::move(p2);
      reduce_from(*pivot, col + 1);
      reduce_from(r2, col + 1);
      if (!is_zero_row(r2)) rest.push_back(std::move(r2));
    }
    if (pivot) {
      if ((*pivot)[col] < 0) {
        for (auto& x : *pivot) x = -x;
      }
      reduce_from(*pivot, col + 1);
      result.push_back(std::move(*pivot));
    }
    pool = std::move(rest);
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = leading(result[i]);
    const BigInt h = result[i][c];
    for (std::size_t k = 0; k < i; ++k) {
      const BigInt q = floor_div(result[k][c], h);
      if (q == 0) continue;
      for (std::size_t j = c; j < dim; ++j) result[k][j] -= q * result[i][j];
    }
  }
  return result;
}

std::vector<Vec> rref(std::vector<Vec> pool, std::size_t dim) {
  std::vector<Vec> rows;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t found = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i][col] != 0) {
        found = i;
        break;
      }
    }
    if (found == pool.size()) continue;
    Vec p = std::move(pool[found]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(found));
    const Rational inv = 1 / p[col];
    for (std::size_t j = col; j < dim; ++j) p[j] *= inv;
    for (auto& r : pool) {
      if (r[col] == 0) continue;
      const Rational f = r[col];
      for (std::size_t j = col; j < dim; ++j) r[j] -= f * p[j];
    }
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      const Rational f = r[col];
      for (std::size_t j = col; j < dim; ++j) r[j] -= f * p[j];
    }
    rows.push_back(std::move(p));
  }
  return rows;
}

std::vector<Vec> canonical(const ScalarDomain& d, std::vector<Vec> gens, std::size_t dim) {
  if (d.rational) return rref(std::move(gens), dim);
  std::vector<IRow> pool;
  pool.reserve(gens.size());
  for (const auto& g : gens) pool.push_back(to_irow(g));
  std::vector<Vec> out;
  for (const auto& r : hermite(std::move(pool), dim, d.modulus)) out.push_back(to_vec(r));
  return out;
}

std::size_t leading_vec(const Vec& r) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) return j;
  }
  return r.size();
}

}  // namespace

Vec ScalarDomain::reduce(Vec v) const {
  if (!rational && modulus > 0) {
    for (auto& x : v) {
      if (!is_integral(x)) throw std::logic_error("non-integral coordinate in a finite ring");
      x = Rational(mod_floor(to_integer(x), modulus));
    }
  }
  return v;
}

Vec ScalarDomain::times_omega(const Vec& v) const {
  if (omega.empty()) return v;
  Vec out(v.size(), Rational(0));
  for (std::size_t base = 0; base < v.size(); base += block) {
    for (std::size_t i = 0; i < block; ++i) {
      if (v[base + i] == 0) continue;
      for (std::size_t j = 0; j < block; ++j) out[base + j] += v[base + i] * Rational(omega[i][j]);
    }
  }
  return out;
}

Submodule Submodule::zero(const ScalarDomain& domain, std::size_t dim) { return span(domain, dim, {}); }

Submodule Submodule::full(const ScalarDomain& domain, std::size_t dim) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return span(domain, dim, gens);
}

Submodule Submodule::span(const ScalarDomain& domain, std::size_t dim, const std::vector<Vec>& gens) {
  std::vector<Vec> all;
  for (const auto& g : gens) {
    if (g.size() != dim) throw std::logic_error("generator has wrong length");
    Vec cur = domain.reduce(g);
    all.push_back(cur);
    if (!domain.omega.empty()) {
      for (std::size_t k = 1; k < domain.block; ++k) {
        cur = domain.times_omega(cur);
        all.push_back(cur);
      }
    }
  }
  return Submodule(domain, dim, canonical(domain, std::move(all), dim));
}

std::vector<Vec> Submodule::generators() const {
  if (!domain_.finite()) return rows_;
  std::vector<Vec> out;
  for (const auto& r : rows_) {
    if (r[leading_vec(r)] != Rational(domain_.modulus)) out.push_back(r);
  }
  return out;
}

std::size_t Submodule::rational_rank() const { return generators().size(); }

std::optional<BigInt> Submodule::order() const {
  if (!domain_.finite()) {
    if (rows_.empty()) return BigInt(1);
    return std::nullopt;
  }
  BigInt total = 1;
  for (const auto& r : rows_) total *= domain_.modulus / to_integer(r[leading_vec(r)]);
  return total;
}

bool Submodule::is_zero() const { return generators().empty(); }

bool Submodule::contains(const Vec& v) const {
  if (v.size() != dim_) return false;
  Vec x = v;
  if (!domain_.rational) {
    for (const auto& c : x) {
      if (!is_integral(c)) return false;
    }
    x = domain_.reduce(std::move(x));
  }
  std::size_t next_col = 0;
  for (const auto& r : rows_) {
    const std::size_t c = leading_vec(r);
    for (std::size_t j = next_col; j < c; ++j) {
      if (x[j] != 0) return false;
    }
    next_col = c + 1;
    if (x[c] == 0) continue;
    Rational f = x[c] / r[c];
    if (!domain_.rational && !is_integral(f)) return false;
    for (std::size_t j = c; j < dim_; ++j) x[j] -= f * r[j];
    if (domain_.finite()) x = domain_.reduce(std::move(x));
  }
  return is_zero_vec(x);
}

bool Submodule::contains(const Submodule& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

Submodule Submodule::join(const Submodule& other) const {
  std::vector<Vec> gens = generators();
  for (const auto& g : other.generators()) gens.push_back(g);
  return Submodule(domain_, dim_, canonical(domain_, std::move(gens), dim_));
}

Submodule kernel(const ScalarDomain& domain, std::size_t dim, const Mat& images, std::size_t target_dim) {
  if (images.size() != dim) throw std::logic_error("kernel: one image row per coordinate expected");
  const std::size_t width = target_dim + dim;
  std::vector<Vec> aug;
  aug.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec row(width, Rational(0));
    for (std::size_t j = 0; j < target_dim; ++j) row[j] = images[i][j];
    row[target_dim + i] = 1;
    aug.push_back(std::move(row));
  }
  ScalarDomain flat = domain;
  flat.omega.clear();
  const auto rows = canonical(flat, std::move(aug), width);
  std::vector<Vec> gens;
  for (const auto& r : rows) {
    if (leading_vec(r) < target_dim) continue;
    gens.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(target_dim), r.end());
  }
  // Kernels of maps commuting with the root are closed under it already.
  return Submodule::span(domain, dim, gens);
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_scale(const Vec& a, const Rational& s) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

Vec vec_mul_mat(const Vec& v, const Mat& m, std::size_t cols) {
  Vec out(cols, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (m[i][j] != 0) out[j] += v[i] * m[i][j];
    }
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b, std::size_t cols) {
  Mat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mul_mat(row, b, cols));
  return out;
}

Mat identity_matrix(std::size_t n) {
  Mat out(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace flab
