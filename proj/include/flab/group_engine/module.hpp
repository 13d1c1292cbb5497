#pragma once

#include <cstdint>
#include <vector>

#include "flab/group_engine/action.hpp"

namespace flab {

using FpMatrix = std::vector<std::vector<std::int64_t>>;

struct FreeModuleResult {
  bool free = false;
  std::size_t dimension = 0;
  std::size_t rank = 0;  // dimension / q when free
  std::size_t fixed_dimension = 0;
  // Non-unit invariant factors of xI - M, monic, low degree first.
  std::vector<std::vector<std::int64_t>> invariant_factors;
  // fixed_dimension * q == dimension
  bool dimension_equation = false;
};

// S = F_p^d with h acting by M (row u = image of basis vector u) and
// M^q = I (PreconditionError otherwise). S is a free F_p<h>-module iff every
// invariant factor of xI - M equals x^q - 1.
FreeModuleResult free_module_check(std::int64_t p, const FpMatrix& matrix, std::int64_t q);

// Coordinates of an elementary abelian p-group (InputError otherwise) and
// the matrix of an automorphism in them.
struct ElementaryCoordinates {
  std::int64_t p = 0;
  std::vector<Elem> basis;
  std::vector<std::vector<std::int64_t>> coords;  // element id -> vector
};
ElementaryCoordinates elementary_coordinates(const FiniteGroup& G);
FpMatrix automorphism_matrix(const ElementaryCoordinates& c, const GroupAutomorphism& a);

}  // namespace flab
