#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/combinatorics/combinatorics.hpp"
#include "flab/group_engine/group.hpp"
#include "flab/report.hpp"

namespace flab {

// sigma(x) = perm[x].
struct GroupAutomorphism {
  std::vector<Elem> perm;

  Elem operator()(Elem x) const { return perm[x]; }
  bool operator==(const GroupAutomorphism&) const = default;
};

GroupAutomorphism identity_automorphism(const Group& G);
// Throws InputError unless perm is a bijection with sigma(xy) =
// sigma(x)sigma(y); all pairs are checked for orders <= 5000, a generator
// by element sweep above that.
void check_group_automorphism(const Group& G, const GroupAutomorphism& a);
// x -> second(first(x))
GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& second);
GroupAutomorphism inverse(const GroupAutomorphism& a);
GroupAutomorphism power(const GroupAutomorphism& a, std::int64_t k);
std::size_t automorphism_order(const GroupAutomorphism& a);

// {x : sigma(x) = x for every sigma}
Subgroup fixed_points(const Group& G, const std::vector<GroupAutomorphism>& auts);
bool is_invariant(const Subgroup& H, const GroupAutomorphism& a);

// f of order n and h of order q with h f h^-1 = f^r.
struct FrobeniusAction {
  GroupAutomorphism f;
  GroupAutomorphism h;
  FrobeniusParams params;
};

struct ActionValidation {
  bool automorphisms = false;
  bool f_order = false;
  bool h_order = false;
  bool relation = false;
  // No nontrivial power of h centralizes a nontrivial element of <f>.
  bool frobenius = false;
  bool prim = false;
  std::string failure;

  // The structural part: automorphisms with the stated orders and relation.
  bool structural() const { return automorphisms && f_order && h_order && relation; }
  Json to_json() const;
};

ActionValidation validate_action(const Group& G, const FrobeniusAction& action);

struct FieldAction {
  FiniteGroup group;  // additive group of GF(p^k), element id = base-p digits
  FrobeniusAction action;
  ActionValidation validation;
  std::vector<std::int64_t> modulus;  // defining polynomial, low degree first
  Elem primitive = 0;
};

// f = multiplication by a primitive element, h = x -> x^p; params
// (p^k - 1, k, p). p and k prime and p^k <= 5000. The action is returned
// even when the Frobenius or (prim) conditions fail; see validation.
FieldAction build_field_action(std::int64_t p, std::int64_t k);

// Fixed-point checks. Each needs a structurally valid action and C_G(F) = 1,
// and reports inapplicable otherwise.
VerificationReport verify_order_formula(const FiniteGroup& G, const FrobeniusAction& action);
VerificationReport verify_coverage(const FiniteGroup& G, const FrobeniusAction& action);
VerificationReport verify_generation(const FiniteGroup& G, const FrobeniusAction& action);
VerificationReport verify_invariant_sylow(const FiniteGroup& G, const FrobeniusAction& action);
VerificationReport verify_nilpotency_transfer(const FiniteGroup& G, const FrobeniusAction& action);
// Empirical records; pass whenever applicable.
VerificationReport rank_report(const FiniteGroup& G, const FrobeniusAction& action);
VerificationReport exponent_relation_report(const FiniteGroup& G, const FrobeniusAction& action);

// Normal subgroups invariant under the automorphisms, all of them
// (order <= 512).
std::vector<Subgroup> invariant_normal_subgroups(const FiniteGroup& G, const std::vector<GroupAutomorphism>& auts,
                                                 std::size_t max_count = 20000);

}  // namespace flab
