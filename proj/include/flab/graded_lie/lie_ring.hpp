#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "flab/graded_lie/ring.hpp"
#include "flab/graded_lie/submodule.hpp"

namespace flab {

// Ring-level coordinates: one ring element per basis vector.
using LieElement = std::vector<RingElement>;

// Degree of each basis vector in Z/modulus (modulus 0: Z-grading).
struct Grading {
  std::vector<std::int64_t> degrees;
  std::int64_t modulus = 0;
};

struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  LieElement value;
};

// Finite-rank Lie ring given by structure constants. Internally elements
// live in "base coordinates": rank * degree(ring) integer (or rational)
// coordinates, coordinate (i, a) standing for w^a e_i.
class GradedLieRing {
 public:
  // constants[i][j] = [e_i, e_j]; stored exactly as given.
  GradedLieRing(CoefficientRing ring, std::size_t rank, std::vector<std::vector<LieElement>> constants,
                std::optional<Grading> grading = std::nullopt);

  // Entries for i < j; [e_j, e_i] is completed as -[e_i, e_j] unless the
  // entry list also names (j, i) explicitly.
  static GradedLieRing from_brackets(CoefficientRing ring, std::size_t rank, const std::vector<BracketEntry>& entries,
                                     std::optional<Grading> grading = std::nullopt);

  static GradedLieRing abelian(CoefficientRing ring, std::size_t rank, std::optional<Grading> grading = std::nullopt);

  std::size_t rank() const { return rank_; }
  const CoefficientRing& ring() const { return ring_; }
  const std::optional<Grading>& grading() const { return grading_; }
  const LieElement& constant(std::size_t i, std::size_t j) const { return constants_[i][j]; }

  std::size_t base_dim() const { return rank_ * ring_.degree(); }
  const ScalarDomain& domain() const { return domain_; }

  LieElement zero_element() const;
  LieElement basis_element(std::size_t i) const;
  Vec to_base(const LieElement& x) const;
  LieElement from_base(const Vec& v) const;
  Vec base_unit(std::size_t u) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  // Left-normed [x_1, x_2, ..., x_k].
  Vec left_normed(const std::vector<Vec>& xs) const;

  Submodule zero_submodule() const { return Submodule::zero(domain_, base_dim()); }
  Submodule whole() const { return Submodule::full(domain_, base_dim()); }
  Submodule span(const std::vector<Vec>& gens) const { return Submodule::span(domain_, base_dim(), gens); }
  // [A, B] as a submodule.
  Submodule bracket(const Submodule& a, const Submodule& b) const;

  // Base matrix (row u = image of base vector u) of a ring-linear map
  // given by ring-level rows (row i = image of e_i).
  Mat base_matrix(const std::vector<LieElement>& ring_rows) const;
  // Base matrix of multiplication by a ring scalar.
  Mat scalar_matrix(const RingElement& a) const;

 private:
  CoefficientRing ring_;
  std::size_t rank_;
  std::vector<std::vector<LieElement>> constants_;
  std::optional<Grading> grading_;
  ScalarDomain domain_;
  // table_[u][v] = [base u, base v] in base coordinates.
  std::vector<std::vector<Vec>> table_;
};

// An additive map given by its base matrix, row u = image of base vector u.
struct LieAutomorphism {
  Mat matrix;
};

LieAutomorphism automorphism_from_rows(const GradedLieRing& L, const std::vector<LieElement>& ring_rows);
Vec apply(const GradedLieRing& L, const LieAutomorphism& phi, const Vec& x);
// First `first`, then `second`.
LieAutomorphism compose(const GradedLieRing& L, const LieAutomorphism& first, const LieAutomorphism& second);
LieAutomorphism power(const GradedLieRing& L, const LieAutomorphism& phi, std::uint64_t e);
bool is_identity(const GradedLieRing& L, const LieAutomorphism& phi);
bool same_map(const GradedLieRing& L, const LieAutomorphism& a, const LieAutomorphism& b);

struct AutomorphismCheck {
  bool ok = true;
  std::string failure;  // "not-invertible" or "bracket"
  std::vector<std::size_t> witness;
};
AutomorphismCheck check_automorphism(const GradedLieRing& L, const LieAutomorphism& phi);

}  // namespace flab
