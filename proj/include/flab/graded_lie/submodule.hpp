#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flab/bigint.hpp"

namespace flab {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// How coordinate vectors are interpreted: a vector space over Q, or a
// Z-lattice read modulo `modulus` (0 for no reduction). For rings of
// integers of cyclotomic fields each ring coordinate spans `block`
// integer coordinates and submodules must be closed under `omega`.
struct ScalarDomain {
  bool rational = false;
  BigInt modulus = 0;
  std::size_t block = 1;
  std::vector<std::vector<BigInt>> omega;

  bool finite() const { return !rational && modulus > 0; }
  Vec reduce(Vec v) const;
  // Multiplies every block of v by the root (row convention).
  Vec times_omega(const Vec& v) const;
};

// Canonical echelon form of a submodule of the coordinate space: reduced
// row echelon form over Q, Hermite normal form for lattices. Two
// submodules are equal iff their canonical rows agree.
class Submodule {
 public:
  Submodule() = default;

  static Submodule zero(const ScalarDomain& domain, std::size_t dim);
  static Submodule full(const ScalarDomain& domain, std::size_t dim);
  // Smallest submodule containing gens (closed under the root when the
  // domain carries one).
  static Submodule span(const ScalarDomain& domain, std::size_t dim, const std::vector<Vec>& gens);

  std::size_t dim() const { return dim_; }
  const ScalarDomain& domain() const { return domain_; }

  // Generators with nonzero image; a basis over Q or over Z.
  std::vector<Vec> generators() const;
  // Number of generators (dimension over Q, Z-rank for plain lattices).
  std::size_t rank() const { return generators().size(); }
  // Rank of the lattice tensored with Q; for finite domains the count of
  // nontrivial pivots.
  std::size_t rational_rank() const;
  // Cardinality for finite domains.
  std::optional<BigInt> order() const;

  bool is_zero() const;
  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  Submodule join(const Submodule& other) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

  const std::vector<Vec>& canonical_rows() const { return rows_; }

 private:
  Submodule(ScalarDomain domain, std::size_t dim, std::vector<Vec> rows)
      : domain_(std::move(domain)), dim_(dim), rows_(std::move(rows)) {}

  ScalarDomain domain_;
  std::size_t dim_ = 0;
  std::vector<Vec> rows_;
};

// {x : x * images = 0}, where images has one row per coordinate of x.
Submodule kernel(const ScalarDomain& domain, std::size_t dim, const Mat& images, std::size_t target_dim);

// Row-convention matrix helpers over the domain (entries reduced).
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rational& s);
Vec vec_mul_mat(const Vec& v, const Mat& m, std::size_t cols);
Mat mat_mul(const Mat& a, const Mat& b, std::size_t cols);
Mat identity_matrix(std::size_t n);
bool is_zero_vec(const Vec& v);

}  // namespace flab
