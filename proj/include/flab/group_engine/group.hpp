#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flab {

using Elem = std::uint32_t;

inline constexpr std::size_t kGroupTableCap = 5000;
inline constexpr std::size_t kExhaustiveCap = 512;

// Elements are the ids 0..order()-1.
class Group {
 public:
  virtual ~Group() = default;
  virtual std::size_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  // Some generating set.
  virtual const std::vector<Elem>& generators() const = 0;

  Elem pow(Elem a, std::int64_t k) const;
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const;
  // b^-1 a b
  Elem conjugate(Elem a, Elem b) const;
  std::size_t element_order(Elem a) const;
};

// Group given by a full multiplication table.
class FiniteGroup : public Group {
 public:
  // Validates shape, identity, inverses and associativity (exhaustive up
  // to order 512, sampled above). Order above 5000 is a CapacityError.
  static FiniteGroup from_table(std::vector<std::vector<Elem>> table);
  // Closure of the generators as permutations of 0..degree-1; element 0
  // is the identity permutation.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens);

  std::size_t order() const override { return table_.size(); }
  Elem identity() const override { return identity_; }
  Elem mul(Elem a, Elem b) const override { return table_[a][b]; }
  Elem inv(Elem a) const override { return inverse_[a]; }
  const std::vector<Elem>& generators() const override { return generators_; }

  const std::vector<std::vector<Elem>>& table() const { return table_; }
  // Filled by from_permutations.
  const std::vector<std::vector<std::size_t>>& permutations() const { return perms_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<std::vector<std::size_t>> perms_;
  Elem identity_ = 0;
};

FiniteGroup cyclic_group(std::size_t n);
// Dihedral group of the given (even) order, generated by r of order
// order/2 and s with s r s = r^-1. Element r^i s^j has id i + (order/2) j.
FiniteGroup dihedral_group(std::size_t order);
FiniteGroup quaternion_group();
// (Z/p)^k, element id = base-p digits.
FiniteGroup elementary_abelian_group(std::int64_t p, std::size_t k);
// Upper unitriangular 3x3 matrices over Z/p; (a,b,c) has id a + p b + p^2 c
// and (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg_group(std::int64_t p);

// Subgroups carry both the sorted element list and a generating set.
struct Subgroup {
  std::vector<Elem> elements;
  std::vector<Elem> generators;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem x) const;
  bool is_trivial() const { return elements.size() <= 1; }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup whole_group(const Group& G);
Subgroup trivial_subgroup(const Group& G);
Subgroup generate(const Group& G, const std::vector<Elem>& gens);
Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b);
// Smallest normal subgroup containing gens.
Subgroup normal_closure(const Group& G, const std::vector<Elem>& gens);
bool is_subset(const Subgroup& a, const Subgroup& b);
bool is_normal(const Group& G, const Subgroup& H);
// [A, B] = <[a, b]>; for normal A, B computed from generators.
Subgroup commutator_subgroup(const Group& G, const Subgroup& A, const Subgroup& B);
// <a^k : a in A>
Subgroup power_subgroup(const Group& G, const Subgroup& A, std::int64_t k);
Subgroup centralizer(const Group& G, const Subgroup& A);
Subgroup center(const Group& G);
Subgroup normalizer(const Group& G, const Subgroup& H);

// gamma_1 = G, gamma_{k+1} = [gamma_k, G], until the series stabilizes.
std::vector<Subgroup> lower_central_series(const Group& G);
std::vector<Subgroup> derived_series(const Group& G);
// Class of a nilpotent group (0 for the trivial group), nullopt otherwise.
std::optional<std::size_t> nilpotency_class(const Group& G);
std::optional<std::size_t> nilpotency_class(const Group& G, const Subgroup& H);
std::size_t exponent(const Group& G, const Subgroup& H);
bool is_abelian(const Group& G, const Subgroup& H);
bool is_cyclic(const Group& G, const Subgroup& H);

std::vector<std::int64_t> prime_divisors(std::int64_t n);
// Prime p when |H| is a power of p (1 for the trivial group), nullopt
// otherwise.
std::optional<std::int64_t> p_group_prime(const Subgroup& H);

// All Sylow p-subgroups (conjugates of one grown from the identity).
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& G, std::int64_t p);

// Every subgroup, as joins of cyclic subgroups. Order <= 512 and at most
// max_count subgroups (CapacityError).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t max_count = 20000);
// Least number of generators of H.
std::size_t min_generators(const FiniteGroup& G, const Subgroup& H);
// max over subgroups of min_generators.
std::size_t group_rank(const FiniteGroup& G, const Subgroup& H);

// H as a group in its own right plus the embedding.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;  // id in H-group -> id in G
};
SubgroupGroup as_group(const FiniteGroup& G, const Subgroup& H);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> coset_of;  // element of G -> coset id
  std::vector<Elem> representative;
};
// N must be normal (PreconditionError otherwise).
Quotient quotient(const FiniteGroup& G, const Subgroup& N);

}  // namespace flab
