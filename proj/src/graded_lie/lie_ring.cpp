#include "flab/graded_lie/lie_ring.hpp"

#include "flab/errors.hpp"

namespace flab {

GradedLieRing::GradedLieRing(CoefficientRing ring, std::size_t rank, std::vector<std::vector<LieElement>> constants,
                             std::optional<Grading> grading)
    : ring_(std::move(ring)),
      rank_(rank),
      constants_(std::move(constants)),
      grading_(std::move(grading)),
      domain_(ring_.domain()) {
  if (constants_.size() != rank_) throw InputError("structure constants must be rank x rank");
  for (auto& row : constants_) {
    if (row.size() != rank_) throw InputError("structure constants must be rank x rank");
    for (auto& value : row) {
      if (value.size() != rank_) throw InputError("bracket value has wrong length");
      for (auto& c : value) {
        if (c.size() != ring_.degree()) throw InputError("ring element has wrong length");
        c = ring_.reduce(c);
      }
    }
  }
  if (grading_ && grading_->degrees.size() != rank_) throw InputError("grading must list one degree per basis vector");
  if (grading_ && grading_->modulus > 0) {
    for (auto& g : grading_->degrees) g = mod_floor(g, grading_->modulus);
  }
  const std::size_t d = ring_.degree();
  const std::size_t n = base_dim();
  std::vector<RingElement> root_powers;
  if (ring_.kind() == RingKind::Cyclotomic) {
    const RingElement w = ring_.root();
    root_powers.push_back(ring_.one());
    for (std::size_t a = 1; a < 2 * d; ++a) root_powers.push_back(ring_.mul(root_powers.back(), w));
  }
  table_.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          LieElement value = constants_[i][j];
          if (!root_powers.empty()) {
            for (auto& c : value) c = ring_.mul(root_powers[a + b], c);
          }
          table_[i * d + a][j * d + b] = to_base(value);
        }
      }
    }
  }
}

GradedLieRing GradedLieRing::from_brackets(CoefficientRing ring, std::size_t rank,
                                           const std::vector<BracketEntry>& entries, std::optional<Grading> grading) {
  std::vector<std::vector<LieElement>> c(rank, std::vector<LieElement>(rank, LieElement(rank, ring.zero())));
  std::vector<std::vector<bool>> explicit_entry(rank, std::vector<bool>(rank, false));
  for (const auto& e : entries) {
    if (e.i >= rank || e.j >= rank) throw InputError("bracket index out of range");
    if (e.value.size() != rank) throw InputError("bracket value has wrong length");
    explicit_entry[e.i][e.j] = true;
  }
  for (const auto& e : entries) {
    c[e.i][e.j] = e.value;
    if (!explicit_entry[e.j][e.i] && e.i != e.j) {
      LieElement neg = e.value;
      for (auto& x : neg) x = ring.neg(x);
      c[e.j][e.i] = neg;
    }
  }
  return GradedLieRing(std::move(ring), rank, std::move(c), std::move(grading));
}

GradedLieRing GradedLieRing::abelian(CoefficientRing ring, std::size_t rank, std::optional<Grading> grading) {
  return from_brackets(std::move(ring), rank, {}, std::move(grading));
}

LieElement GradedLieRing::zero_element() const { return LieElement(rank_, ring_.zero()); }

LieElement GradedLieRing::basis_element(std::size_t i) const {
  LieElement e = zero_element();
  e.at(i) = ring_.one();
  return e;
}

Vec GradedLieRing::to_base(const LieElement& x) const {
  const std::size_t d = ring_.degree();
  Vec out(base_dim(), Rational(0));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t a = 0; a < d; ++a) out[i * d + a] = x[i][a];
  }
  return domain_.reduce(std::move(out));
}

LieElement GradedLieRing::from_base(const Vec& v) const {
  const std::size_t d = ring_.degree();
  LieElement out = zero_element();
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t a = 0; a < d; ++a) out[i][a] = v[i * d + a];
  }
  return out;
}

Vec GradedLieRing::base_unit(std::size_t u) const {
  Vec e(base_dim(), Rational(0));
  e.at(u) = 1;
  return e;
}

Vec GradedLieRing::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = base_dim();
  Vec out(n, Rational(0));
  for (std::size_t u = 0; u < n; ++u) {
    if (x[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (y[v] == 0) continue;
      const Rational s = x[u] * y[v];
      const Vec& t = table_[u][v];
      for (std::size_t k = 0; k < n; ++k) {
        if (t[k] != 0) out[k] += s * t[k];
      }
    }
  }
  return domain_.reduce(std::move(out));
}

LieElement GradedLieRing::bracket(const LieElement& x, const LieElement& y) const {
  return from_base(bracket(to_base(x), to_base(y)));
}

Vec GradedLieRing::left_normed(const std::vector<Vec>& xs) const {
  if (xs.empty()) throw InputError("empty commutator");
  Vec acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = bracket(acc, xs[i]);
  return acc;
}

Submodule GradedLieRing::bracket(const Submodule& a, const Submodule& b) const {
  std::vector<Vec> gens;
  const auto ga = a.generators();
  const auto gb = b.generators();
  for (const auto& x : ga) {
    for (const auto& y : gb) {
      Vec z = bracket(x, y);
      if (!is_zero_vec(z)) gens.push_back(std::move(z));
    }
  }
  return span(gens);
}

Mat GradedLieRing::base_matrix(const std::vector<LieElement>& ring_rows) const {
  if (ring_rows.size() != rank_) throw InputError("matrix must have one row per basis vector");
  const std::size_t d = ring_.degree();
  Mat out;
  out.reserve(base_dim());
  for (std::size_t i = 0; i < rank_; ++i) {
    if (ring_rows[i].size() != rank_) throw InputError("matrix row has wrong length");
    LieElement cur = ring_rows[i];
    for (std::size_t a = 0; a < d; ++a) {
      out.push_back(to_base(cur));
      if (a + 1 < d) {
        for (auto& c : cur) c = ring_.mul(c, ring_.root());
      }
    }
  }
  return out;
}

Mat GradedLieRing::scalar_matrix(const RingElement& a) const {
  std::vector<LieElement> rows;
  for (std::size_t i = 0; i < rank_; ++i) {
    LieElement r = zero_element();
    r[i] = a;
    rows.push_back(std::move(r));
  }
  return base_matrix(rows);
}

LieAutomorphism automorphism_from_rows(const GradedLieRing& L, const std::vector<LieElement>& ring_rows) {
  return {L.base_matrix(ring_rows)};
}

Vec apply(const GradedLieRing& L, const LieAutomorphism& phi, const Vec& x) {
  return L.domain().reduce(vec_mul_mat(x, phi.matrix, L.base_dim()));
}

LieAutomorphism compose(const GradedLieRing& L, const LieAutomorphism& first, const LieAutomorphism& second) {
  Mat m = mat_mul(first.matrix, second.matrix, L.base_dim());
  for (auto& row : m) row = L.domain().reduce(std::move(row));
  return {std::move(m)};
}

LieAutomorphism power(const GradedLieRing& L, const LieAutomorphism& phi, std::uint64_t e) {
  LieAutomorphism result{identity_matrix(L.base_dim())};
  LieAutomorphism b = phi;
  while (e > 0) {
    if (e & 1U) result = compose(L, result, b);
    e >>= 1U;
    if (e > 0) b = compose(L, b, b);
  }
  return result;
}

bool same_map(const GradedLieRing& L, const LieAutomorphism& a, const LieAutomorphism& b) {
  for (std::size_t u = 0; u < L.base_dim(); ++u) {
    if (L.domain().reduce(a.matrix[u]) != L.domain().reduce(b.matrix[u])) return false;
  }
  return true;
}

bool is_identity(const GradedLieRing& L, const LieAutomorphism& phi) {
  return same_map(L, phi, LieAutomorphism{identity_matrix(L.base_dim())});
}

AutomorphismCheck check_automorphism(const GradedLieRing& L, const LieAutomorphism& phi) {
  AutomorphismCheck out;
  if (phi.matrix.size() != L.base_dim()) throw InputError("automorphism matrix has wrong size");
  if (!(L.span(phi.matrix) == L.whole())) {
    out.ok = false;
    out.failure = "not-invertible";
    return out;
  }
  const std::size_t d = L.ring().degree();
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = i + 1; j < L.rank(); ++j) {
      const Vec ei = L.base_unit(i * d);
      const Vec ej = L.base_unit(j * d);
      const Vec lhs = apply(L, phi, L.bracket(ei, ej));
      const Vec rhs = L.bracket(apply(L, phi, ei), apply(L, phi, ej));
      if (lhs != rhs) {
        out.ok = false;
        out.failure = "bracket";
        out.witness = {i, j};
        return out;
      }
    }
  }
  return out;
}

}  // namespace flab
