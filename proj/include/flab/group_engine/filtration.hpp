#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flab/graded_lie/lie_ring.hpp"
#include "flab/group_engine/group.hpp"
#include "flab/report.hpp"

namespace flab {

// D_1 >= D_2 >= ... with D_i = prod_{j p^k >= i} gamma_j(G)^{p^k}. terms[i-1]
// is D_i; the last term is the first trivial one (empty for trivial G).
struct Filtration {
  std::int64_t p = 0;
  std::vector<Subgroup> terms;

  // D_i for any i >= 1 (trivial past the stored range).
  const Subgroup& term(std::size_t i) const;
  std::size_t length() const { return terms.size(); }
  // log_p |D_i / D_{i+1}| for i = 1 .. length-1.
  std::vector<std::size_t> dimensions() const;
};

// InputError unless G is a p-group.
Filtration jz_filtration(const Group& G, std::int64_t p);

// [D_i, D_j] <= D_{i+j} and D_i^p <= D_{pi} for all i, j in range.
VerificationReport check_filtration_laws(const Group& G, const Filtration& D);

// Graded Lie algebra over F_p on the sum of D_i / D_{i+1}.
struct DLAlgebra {
  Filtration filtration;
  GradedLieRing algebra;
  std::vector<std::size_t> degree_of_basis;  // 1-based degrees
  std::vector<Elem> basis_elements;           // group representatives
  // L_p(G): subalgebra generated by the degree-1 component.
  Submodule lp;
  std::optional<std::size_t> lp_class;
  // Image of every commutator of representatives agrees with the bracket
  // (all representatives; groups of order <= 64).
  std::optional<bool> well_defined;

  // Image of x in D_k / D_{k+1} (x must lie in D_k), as a vector of DL.
  Vec image(Elem x, std::size_t k) const;
  // Largest k with x in D_k (0 for the identity).
  std::size_t degree_of(Elem x) const;

  // element -> coordinates in each degree, filled by lazard_algebra.
  std::vector<std::vector<int>> coset_index;             // [degree][element]
  std::vector<std::vector<std::vector<std::int64_t>>> coords;  // [degree][coset]
  std::vector<std::size_t> offset;                        // [degree]
};

DLAlgebra lazard_algebra(const FiniteGroup& G, std::int64_t p);

// (ad x)^p = ad(x^p) in DL(G) for every x, with x^p read in degree p*deg(x);
// elements of order p^t have ad-nilpotency index at most p^t.
VerificationReport lazard_lemma_check(const FiniteGroup& G, std::int64_t p);

// G^p >= [G,G] (G^4 >= [G,G] for p = 2). InputError unless a p-group.
bool is_powerful(const Group& G, std::int64_t p);

}  // namespace flab
