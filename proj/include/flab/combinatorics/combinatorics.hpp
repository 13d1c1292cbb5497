#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "flab/bigint.hpp"
#include "flab/combinatorics/polynomial.hpp"

namespace flab {

// (n, q, r): f has order n, h has order q, f^h = f^r.
struct FrobeniusParams {
  std::int64_t n = 1;
  std::int64_t q = 1;
  std::int64_t r = 0;

  // Throws InputError unless n >= 1, q >= 1 and 1 <= r <= n - 1.
  void check_well_formed() const;
};

std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Multiplicative order of r modulo d, or 0 when gcd(r, d) != 1.
std::int64_t multiplicative_order(std::int64_t r, std::int64_t d);

bool check_prim(std::int64_t n, std::int64_t q, std::int64_t r);
bool check_prim(const FrobeniusParams& params);

// First divisor d > 1 of n at which the order of r differs from q.
std::optional<std::int64_t> prim_violation(std::int64_t n, std::int64_t q, std::int64_t r);

std::int64_t additive_order(std::int64_t b, std::int64_t n);

inline constexpr std::size_t kDefaultDependenceLength = 8;

struct DependenceResult {
  bool dependent = false;
  // Lexicographically least exponent tuple witnessing dependence.
  std::vector<std::int64_t> exponents;
};

// Entries are reduced mod n; an entry divisible by n is an InputError.
// Sequences longer than max_length raise CapacityError.
DependenceResult find_dependence(const std::vector<std::int64_t>& seq, const FrobeniusParams& params,
                                 std::size_t max_length = kDefaultDependenceLength);

bool is_r_dependent(const std::vector<std::int64_t>& seq, const FrobeniusParams& params,
                    std::size_t max_length = kDefaultDependenceLength);

// Nonzero j such that seq followed by j is r-dependent. seq must be
// r-independent (PreconditionError otherwise).
std::set<std::int64_t> d_set(const std::vector<std::int64_t>& seq, const FrobeniusParams& params);

// Greedy extension from the first entry; the result keeps the input order.
std::optional<std::vector<std::int64_t>> find_independent_subseq(const std::vector<std::int64_t>& seq,
                                                                 std::int64_t m,
                                                                 const FrobeniusParams& params);

// max{2^(2^(2q-3)-1) c^(2^(2q-3)), q^(c+1)}
BigInt capacity_N(std::int64_t c, std::int64_t q);

// c + q^(c+1)
BigInt engel_width_w(std::int64_t c, std::int64_t q);

BigInt charp_bound(const IntPoly& g1, const IntPoly& g2);

// All 2 <= n0 <= limit at which g1 and g2 share a root x != 0 mod n0.
std::vector<std::int64_t> common_root_moduli(const IntPoly& g1, const IntPoly& g2, std::int64_t limit);

inline constexpr std::int64_t kMaxChar0Terms = 6;

// Nondecreasing exponent tuples (i_1..i_m), 0 <= i_k < n, with
// w^i_1 + ... + w^i_m = m in Z[x]/Phi_n.
std::vector<std::vector<std::int64_t>> char0_exhaust(std::int64_t n, std::int64_t m);

}  // namespace flab
