#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flab/combinatorics/combinatorics.hpp"
#include "flab/graded_lie/lie_ring.hpp"

namespace flab {

struct LieValidation {
  bool ok = true;
  // "antisymmetry", "self-bracket", "jacobi" or "grading".
  std::string failure;
  std::vector<std::size_t> witness;
};

LieValidation validate(const GradedLieRing& L);

// Descending chain of submodules. For the lower central series terms[k]
// is gamma_{k+1}; for the derived series terms[k] is L^(k).
struct SubringChain {
  std::vector<Submodule> terms;
  // Whether the chain reached zero; otherwise it stabilized at a nonzero
  // term (over Z or Z[w]: its rational rank stopped dropping).
  bool reaches_zero = false;

  // Least c with terms[c] = 0 (the class, resp. derived length).
  std::optional<std::size_t> length() const;
};

SubringChain lower_central_series(const GradedLieRing& L);
SubringChain derived_series(const GradedLieRing& L);
// gamma_1(K) = K, gamma_{j+1}(K) = [gamma_j(K), K] for a submodule K.
SubringChain lower_central_series(const GradedLieRing& L, const Submodule& K);

Submodule centralizer(const GradedLieRing& L, const std::vector<Vec>& S);
Submodule fixed_subring(const GradedLieRing& L, const std::vector<LieAutomorphism>& A);

bool is_ideal(const GradedLieRing& L, const Submodule& K);

struct SelectiveResult {
  bool holds = true;
  std::vector<std::int64_t> grade_tuple;
  std::vector<std::size_t> basis_choice;
};

// Every left-normed [x_{d_1}, ..., x_{d_{c+1}}] with r-independent
// (d_1, ..., d_{c+1}) vanishes. Needs a Z/n grading with L_0 = 0.
SelectiveResult check_selective_nilpotency(const GradedLieRing& L, std::int64_t c, const FrobeniusParams& params);

struct EigenDecomposition {
  std::vector<Submodule> components;
  bool spans = false;          // sum of components is L
  bool direct = false;         // spans, and the sum is direct
  bool n_multiple_in_sum = false;      // n L lies in the sum
  bool dependencies_annihilated = false;  // every vanishing sum has n l_i = 0
};

// L_i = ker(phi - w^i). w must have multiplicative order exactly n and
// phi^n must be the identity.
EigenDecomposition eigenspace_decomposition(const GradedLieRing& L, const LieAutomorphism& phi, std::int64_t n,
                                            const RingElement& omega);

// Multiplicative order of a ring element, or nullopt beyond `limit`.
std::optional<std::int64_t> ring_order(const CoefficientRing& ring, const RingElement& a, std::int64_t limit);

std::int64_t hall_class_bound(std::int64_t c, std::int64_t k);

struct HallImplication {
  bool applicable = false;
  bool holds = false;
  std::int64_t c = 0;
  std::int64_t k = 0;
  std::int64_t bound = 0;
  std::optional<std::size_t> nilpotency_class;
  std::string reason;
};

HallImplication verify_hall_implication(const GradedLieRing& L, const Submodule& K);

// gamma_{v+1}(n^u L) = 0.
bool check_scaled_nilpotency(const GradedLieRing& L, std::int64_t n, std::int64_t u, std::int64_t v);

std::optional<std::int64_t> ad_nilpotency_index(const GradedLieRing& L, const Vec& y);

struct VandermondeCoefficients {
  std::size_t s = 0;
  std::int64_t l0 = 0;
  std::vector<RingElement> lambda;
  bool verified = false;
};

// components: (k_i, y_{k_i}) with distinct k_i. For z = sum y_{k_i} and each
// s, n^l0 y_{k_s} = sum_j lambda_j (z phi^j). Needs Cyclotomic(n).
std::vector<VandermondeCoefficients> vandermonde_extract(const GradedLieRing& L, const LieAutomorphism& phi,
                                                         std::int64_t n,
                                                         const std::vector<std::pair<std::int64_t, Vec>>& components);

}  // namespace flab
