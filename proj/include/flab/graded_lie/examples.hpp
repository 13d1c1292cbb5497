#pragma once

#include <cstdint>
#include <vector>

#include "flab/graded_lie/lie_ring.hpp"

namespace flab {

// A rank-3 ring with the Klein four-group F = {1, f_1, f_2, f_3} and
// H = <h> of order 3 acting on it; h f_i h^-1 = f_{i+1}.
struct FrobeniusLieExample {
  GradedLieRing ring;
  std::vector<LieAutomorphism> f;
  LieAutomorphism h;
};

// [e_1,e_2] = e_3, [e_2,e_3] = e_1, [e_3,e_1] = e_2. Characteristic 2 is
// rejected.
FrobeniusLieExample example_simple3(const CoefficientRing& ring);

// Same constants scaled by p over Z/p^m; nilpotent of class exactly m.
FrobeniusLieExample example_pm(std::int64_t p, std::int64_t m);

}  // namespace flab
