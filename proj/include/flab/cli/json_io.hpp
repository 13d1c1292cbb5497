#pragma once

#include <map>
#include <optional>
#include <string>

#include "flab/graded_lie/lie_ring.hpp"
#include "flab/group_engine/action.hpp"
#include "flab/report.hpp"

namespace flab::cli {

// "Z", "Q", "Z/9", "F5", "Z[w3]".
CoefficientRing ring_from_string(const std::string& text);
std::string ring_to_string(const CoefficientRing& ring);

// Integer, "a/b" string, or an array of power-basis coordinates.
RingElement ring_element_from_json(const CoefficientRing& ring, const Json& j);
Json ring_element_to_json(const CoefficientRing& ring, const RingElement& a);

// Large integers are written as decimal strings, the rest as numbers.
Json integer_to_json(const BigInt& v);

// {"ring": "F5", "rank": 3, "brackets": [[i, j, [..]], ..],
//  "grading": {"degrees": [..], "modulus": n},
//  "automorphisms": {"f": [[..], ..], ..}}
// Bracket entries are for i < j with 0-based basis indices; automorphism
// rows are the images of the basis vectors.
struct LieInput {
  GradedLieRing ring;
  std::map<std::string, LieAutomorphism> automorphisms;
};
LieInput lie_from_json(const Json& j);
Json lie_to_json(const GradedLieRing& L, const std::map<std::string, LieAutomorphism>& automorphisms = {});

// {"table": [[..]]}, {"permutations": {"degree": d, "generators": [[..]]}},
// {"builtin": "dihedral", "order": 8} (also cyclic, quaternion,
// elementary_abelian with p and k, heisenberg with p) or
// {"field": {"p": 2, "k": 3}}, optionally with
// "action": {"f": [..], "h": [..], "n": n, "q": q, "r": r}.
// A field group carries its own action.
struct GroupInput {
  FiniteGroup group;
  std::optional<FrobeniusAction> action;
  std::string label;
};
GroupInput group_from_json(const Json& j);
FrobeniusAction action_from_json(const Json& j, std::size_t order);
Json action_to_json(const FrobeniusAction& a);

Json read_json_file(const std::string& path);

}  // namespace flab::cli
