#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/combinatorics/combinatorics.hpp"
#include "flab/free_lie/hall.hpp"

namespace flab {

// delta_0(x) = x, delta_k(x_1..x_{2^k}) = [delta_{k-1}(first half),
// delta_{k-1}(second half)].
Bracket delta(std::size_t k, const std::vector<Bracket>& args);

// [u_1, ..., u_c, m_1, ..., m_s]; the u_i are letters, the m_j are
// brackets of tail letters.
struct FormalCommutator {
  std::vector<Bracket> head;
  std::vector<Bracket> tail;

  Bracket expr() const;
  std::string to_string() const;
};

enum class DropReason {
  ZeroIndexSum,        // some tail entry has index 0 mod n
  IndependentBracket,  // [u_1..u_c, m_1] has r-independent indices
  EngelAnnihilated,    // w or more equal entries of large additive order
};

std::string to_string(DropReason reason);

struct DroppedTerm {
  FormalCommutator term;
  DropReason reason;
};

struct KeptTerm {
  FormalCommutator term;
  // Tail entries past position `leading` have index in the low-order part
  // of the D-set. Equals the tail length for the first rewriting.
  std::size_t leading = 0;
};

struct RewriteResult {
  std::vector<std::int64_t> d_set;
  FreeLieElement input;
  std::vector<KeptTerm> kept;
  std::vector<DroppedTerm> dropped;
  // input == sum of kept + sum of dropped in the free Lie ring.
  bool identity_holds = false;
};

// Rewrites [u_1..u_c, x_1..x_t] so that every kept term has all tail
// indices in D(d_1..d_c). The head indices must be r-independent
// (PreconditionError otherwise).
RewriteResult odin_rewrite(const std::vector<IndexedGenerator>& head, const std::vector<IndexedGenerator>& tail,
                           const FrobeniusParams& params);

// Continues the first rewriting: kept terms longer than (w-1)|D| are
// reordered so entries whose index has additive order above
// capacity_N(c, q) come first, grouped by index; terms with w equal such
// entries are dropped. Every kept term then has leading <= (w-1)|D|.
RewriteResult dva_rewrite(const std::vector<IndexedGenerator>& head, const std::vector<IndexedGenerator>& tail,
                          const FrobeniusParams& params, std::int64_t w);

struct MembershipResult {
  bool member = false;
  std::size_t generators = 0;
  // Dimension of the multilinear component that contains delta_f.
  BigInt component_dimension = 0;
  // Dimension of its intersection with the ideal.
  std::size_t ideal_dimension = 0;
  std::string delta;
};

// In the free Lie ring on generators y_1..y_{2^f} with the given indices,
// decides over Q whether delta_f(y_1..y_{2^f}) lies in the ideal spanned by
// commutators with a subcommutator of index 0 mod n or a subcommutator
// [g_1..g_{c+1}] whose entries are index-homogeneous with r-independent
// indices. 2^f is limited by max_weight (CapacityError).
MembershipResult razresh_membership(std::int64_t c, const FrobeniusParams& params,
                                    const std::vector<std::int64_t>& indices, std::size_t max_weight);

}  // namespace flab
