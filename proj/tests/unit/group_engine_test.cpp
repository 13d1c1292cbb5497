#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "flab/errors.hpp"
#include "flab/graded_lie/examples.hpp"
#include "flab/group_engine/action.hpp"
#include "flab/group_engine/bch.hpp"
#include "flab/group_engine/filtration.hpp"
#include "flab/group_engine/group.hpp"
#include "flab/group_engine/module.hpp"

using namespace flab;

namespace {

// Naive oracles on the raw multiplication table.

std::set<Elem> naive_closure(const FiniteGroup& G, std::set<Elem> s) {
  s.insert(G.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) {
        if (s.insert(G.table()[a][b]).second) grew = true;
      }
    }
  }
  return s;
}

std::set<Elem> naive_commutators(const FiniteGroup& G, const std::set<Elem>& A, const std::set<Elem>& B) {
  std::set<Elem> s;
  for (Elem a : A) {
    for (Elem b : B) {
      const auto& t = G.table();
      s.insert(t[t[G.inv(a)][G.inv(b)]][t[a][b]]);
    }
  }
  return naive_closure(G, s);
}

std::set<Elem> naive_powers(const FiniteGroup& G, const std::set<Elem>& A, std::int64_t k) {
  std::set<Elem> s;
  for (Elem a : A) {
    Elem x = G.identity();
    for (std::int64_t i = 0; i < k; ++i) x = G.table()[x][a];
    s.insert(x);
  }
  return naive_closure(G, s);
}

std::set<Elem> as_set(const Subgroup& H) { return {H.elements.begin(), H.elements.end()}; }

std::size_t naive_order(const FiniteGroup& G, Elem a) {
  std::size_t k = 1;
  for (Elem x = a; x != G.identity(); x = G.table()[x][a]) ++k;
  return k;
}

// log_p |D_i/D_{i+1}| from the definition D_i = prod_{j p^k >= i} gamma_j^{p^k}.
std::vector<std::size_t> naive_jz_dimensions(const FiniteGroup& G, std::int64_t p) {
  std::set<Elem> all;
  for (Elem x = 0; x < G.order(); ++x) all.insert(x);
  std::vector<std::set<Elem>> gamma{all};
  while (gamma.back().size() > 1) {
    auto next = naive_commutators(G, gamma.back(), all);
    if (next == gamma.back()) break;
    gamma.push_back(next);
  }
  auto gamma_j = [&](std::size_t j) { return j <= gamma.size() ? gamma[j - 1] : gamma.back(); };
  std::vector<std::size_t> sizes;
  for (std::size_t i = 1;; ++i) {
    std::set<Elem> gens;
    for (std::size_t j = 1; j <= i; ++j) {
      std::int64_t pk = 1;
      while (static_cast<std::size_t>(pk) * j < i) pk *= p;
      const auto part = naive_powers(G, gamma_j(j), pk);
      gens.insert(part.begin(), part.end());
    }
    sizes.push_back(naive_closure(G, gens).size());
    if (sizes.back() == 1) break;
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    std::size_t r = sizes[i] / sizes[i + 1], d = 0;
    while (r > 1) {
      r /= static_cast<std::size_t>(p);
      ++d;
    }
    dims.push_back(d);
  }
  return dims;
}

FiniteGroup symmetric3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

// Rank of a matrix over F_p.
std::size_t rank_fp(FpMatrix m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][j] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    std::int64_t inv = 1;
    while (m[r][j] * inv % p != 1) ++inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = m[i][j] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, std::int64_t p) {
  const std::size_t n = a.size();
  FpMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

// Free F_p<h>-module of rank d/q iff dim ker g(M) = (d/q) deg g for every
// monic divisor g of x^q - 1 (divisors found by brute force).
bool naive_free(const FpMatrix& M, std::int64_t p, std::int64_t q) {
  const std::size_t d = M.size();
  if (d % static_cast<std::size_t>(q) != 0) return false;
  const std::size_t k = d / static_cast<std::size_t>(q);
  std::vector<FpMatrix> powers{FpMatrix(d, std::vector<std::int64_t>(d, 0))};
  for (std::size_t i = 0; i < d; ++i) powers[0][i][i] = 1;
  for (std::int64_t i = 1; i <= q; ++i) powers.push_back(mat_mul(powers.back(), M, p));
  for (std::int64_t deg = 1; deg <= q; ++deg) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < deg; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> g(static_cast<std::size_t>(deg) + 1, 0);
      g.back() = 1;
      std::int64_t c = code;
      for (std::int64_t i = 0; i < deg; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      // g divides x^q - 1: remainder of x^q - 1 by g vanishes.
      std::vector<std::int64_t> rem(static_cast<std::size_t>(q) + 1, 0);
      rem[0] = p - 1;
      rem.back() = 1;
      for (std::int64_t top = q; top >= deg; --top) {
        const std::int64_t lead = rem[static_cast<std::size_t>(top)];
        for (std::int64_t i = 0; i <= deg; ++i) {
          auto& r = rem[static_cast<std::size_t>(top - deg + i)];
          r = ((r - lead * g[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      if (std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v != 0; })) continue;
      FpMatrix gm(d, std::vector<std::int64_t>(d, 0));
      for (std::int64_t i = 0; i <= deg; ++i)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            gm[a][b] = (gm[a][b] + g[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(i)][a][b]) % p;
      if (d - rank_fp(gm, p) != k * static_cast<std::size_t>(deg)) return false;
    }
  }
  return true;
}

// Permutation matrix with the given cycle lengths, conjugated by a random
// invertible matrix.
FpMatrix random_module(const std::vector<std::size_t>& cycles, std::int64_t p, std::mt19937& rng) {
  const std::size_t d = std::accumulate(cycles.begin(), cycles.end(), std::size_t{0});
  FpMatrix P(d, std::vector<std::int64_t>(d, 0));
  std::size_t at = 0;
  for (std::size_t len : cycles) {
    for (std::size_t i = 0; i < len; ++i) P[at + i][at + (i + 1) % len] = 1;
    at += len;
  }
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  FpMatrix U, Uinv;
  while (true) {
    U.assign(d, std::vector<std::int64_t>(d, 0));
    for (auto& row : U)
      for (auto& v : row) v = coef(rng);
    if (rank_fp(U, p) == d) break;
  }
  // Inverse by Gauss-Jordan on [U | I].
  FpMatrix aug(d, std::vector<std::int64_t>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = U[i][j];
    aug[i][d + i] = 1;
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t piv = j;
    while (aug[piv][j] == 0) ++piv;
    std::swap(aug[j], aug[piv]);
    std::int64_t inv = 1;
    while (aug[j][j] * inv % p != 1) ++inv;
    for (auto& v : aug[j]) v = v * inv % p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == j || aug[i][j] == 0) continue;
      const std::int64_t f = aug[i][j];
      for (std::size_t k = 0; k < 2 * d; ++k) aug[i][k] = ((aug[i][k] - f * aug[j][k]) % p + p) % p;
    }
  }
  Uinv.assign(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) Uinv[i][j] = aug[i][d + j];
  return mat_mul(mat_mul(U, P, p), Uinv, p);
}

std::vector<FiniteGroup> small_p_groups() {
  std::vector<FiniteGroup> gs;
  gs.push_back(cyclic_group(4));
  gs.push_back(cyclic_group(8));
  gs.push_back(dihedral_group(8));
  gs.push_back(quaternion_group());
  gs.push_back(heisenberg_group(3));
  gs.push_back(elementary_abelian_group(2, 3));
  gs.push_back(dihedral_group(16));
  return gs;
}

std::int64_t prime_of(const FiniteGroup& G) { return *p_group_prime(whole_group(G)); }

}  // namespace

TEST(GroupToolkit, CyclicFour) {
  const FiniteGroup G = cyclic_group(4);
  const auto lcs = lower_central_series(G);
  EXPECT_TRUE(lcs.size() < 2 || lcs[1].is_trivial());
  EXPECT_EQ(exponent(G, whole_group(G)), 4u);
  EXPECT_EQ(group_rank(G, whole_group(G)), 1u);
  EXPECT_EQ(all_subgroups(G).size(), 3u);
}

TEST(GroupToolkit, DihedralEight) {
  const FiniteGroup G = dihedral_group(8);
  const auto lcs = lower_central_series(G);
  ASSERT_GE(lcs.size(), 2u);
  EXPECT_EQ(lcs[1].size(), 2u);
  EXPECT_TRUE(lcs[1].contains(2));  // r^2
  EXPECT_EQ(nilpotency_class(G), std::optional<std::size_t>(2));
  EXPECT_EQ(all_subgroups(G).size(), 10u);
  EXPECT_EQ(group_rank(G, whole_group(G)), 2u);
  EXPECT_EQ(min_generators(G, whole_group(G)), 2u);
}

TEST(GroupToolkit, QuaternionEight) {
  const FiniteGroup G = quaternion_group();
  EXPECT_EQ(center(G).size(), 2u);
  EXPECT_EQ(exponent(G, whole_group(G)), 4u);
  EXPECT_EQ(all_subgroups(G).size(), 6u);
  EXPECT_EQ(group_rank(G, whole_group(G)), 2u);
  EXPECT_FALSE(is_abelian(G, whole_group(G)));
}

TEST(GroupToolkit, AgreesWithNaiveOracles) {
  std::vector<FiniteGroup> gs = small_p_groups();
  gs.push_back(symmetric3());
  gs.push_back(dihedral_group(12));
  gs.push_back(FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
  for (const auto& G : gs) {
    std::set<Elem> all;
    for (Elem x = 0; x < G.order(); ++x) all.insert(x);
    EXPECT_EQ(as_set(commutator_subgroup(G, whole_group(G), whole_group(G))), naive_commutators(G, all, all));
    EXPECT_EQ(as_set(power_subgroup(G, whole_group(G), 2)), naive_powers(G, all, 2));
    std::set<Elem> z;
    for (Elem a = 0; a < G.order(); ++a) {
      bool central = true;
      for (Elem b = 0; b < G.order() && central; ++b) central = G.table()[a][b] == G.table()[b][a];
      if (central) z.insert(a);
    }
    EXPECT_EQ(as_set(center(G)), z);
    std::size_t e = 1;
    for (Elem a = 0; a < G.order(); ++a) e = std::lcm(e, naive_order(G, a));
    EXPECT_EQ(exponent(G, whole_group(G)), e);
    for (Elem a = 0; a < G.order(); ++a) EXPECT_EQ(G.element_order(a), naive_order(G, a));
  }
}

TEST(GroupToolkit, SylowAndQuotient) {
  const FiniteGroup S3 = symmetric3();
  EXPECT_EQ(S3.order(), 6u);
  EXPECT_EQ(sylow_subgroups(S3, 2).size(), 3u);
  EXPECT_EQ(sylow_subgroups(S3, 3).size(), 1u);
  const FiniteGroup S4 = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  EXPECT_EQ(S4.order(), 24u);
  EXPECT_EQ(sylow_subgroups(S4, 2).size(), 3u);
  EXPECT_EQ(sylow_subgroups(S4, 3).size(), 4u);
  EXPECT_EQ(nilpotency_class(S4), std::nullopt);

  const FiniteGroup D8 = dihedral_group(8);
  const Quotient Q = quotient(D8, center(D8));
  EXPECT_EQ(Q.group.order(), 4u);
  EXPECT_EQ(exponent(Q.group, whole_group(Q.group)), 2u);
  EXPECT_THROW(quotient(S3, generate(S3, {S3.generators()[0]})), PreconditionError);
}

TEST(GroupToolkit, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), InputError);
  EXPECT_THROW(cyclic_group(kGroupTableCap + 1), CapacityError);
  const FiniteGroup G = FiniteGroup::from_table(cyclic_group(5).table());
  EXPECT_EQ(G.order(), 5u);
}

TEST(FieldAction, TwoCubed) {
  const FieldAction A = build_field_action(2, 3);
  EXPECT_EQ(A.group.order(), 8u);
  EXPECT_EQ(A.action.params.n, 7);
  EXPECT_EQ(A.action.params.q, 3);
  EXPECT_EQ(A.action.params.r, 2);
  EXPECT_TRUE(A.validation.structural());
  EXPECT_TRUE(A.validation.frobenius);
  EXPECT_TRUE(A.validation.prim);
  EXPECT_TRUE(fixed_points(A.group, {A.action.f}).is_trivial());
  const Subgroup cgh = fixed_points(A.group, {A.action.h});
  EXPECT_EQ(cgh.elements, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(fixed_points(A.group, {identity_automorphism(A.group)}).size(), 8u);
}

TEST(FieldAction, TwoSquaredAndThreeSquared) {
  const FieldAction A = build_field_action(2, 2);
  EXPECT_EQ(A.group.order(), 4u);
  EXPECT_EQ(A.action.params.n, 3);
  EXPECT_EQ(fixed_points(A.group, {A.action.h}).size(), 2u);
  EXPECT_TRUE(A.validation.prim);

  const FieldAction B = build_field_action(3, 2);
  EXPECT_EQ(B.group.order(), 9u);
  EXPECT_EQ(B.action.params.n, 8);
  EXPECT_EQ(B.action.params.r, 3);
  EXPECT_TRUE(B.validation.structural());
  EXPECT_FALSE(B.validation.prim);
  EXPECT_FALSE(B.validation.frobenius);  // h centralizes f^4 = -1

  EXPECT_THROW(build_field_action(4, 2), InputError);
  EXPECT_THROW(build_field_action(2, 4), InputError);
}

TEST(FieldAction, FixedPointsMatchBruteForce) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 5}, {5, 2}, {3, 3}}) {
    const FieldAction A = build_field_action(p, k);
    std::vector<Elem> fh, ff;
    for (Elem x = 0; x < A.group.order(); ++x) {
      if (A.action.h(x) == x) fh.push_back(x);
      if (A.action.f(x) == x) ff.push_back(x);
    }
    EXPECT_EQ(fixed_points(A.group, {A.action.h}).elements, fh);
    EXPECT_EQ(fixed_points(A.group, {A.action.f}).elements, ff);
    EXPECT_EQ(fh.size(), static_cast<std::size_t>(p));
    EXPECT_EQ(automorphism_order(A.action.f), A.group.order() - 1);
  }
}

TEST(Verifiers, PassOnFieldActions) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 5}}) {
    const FieldAction A = build_field_action(p, k);
    for (const auto& r : {verify_order_formula(A.group, A.action), verify_generation(A.group, A.action),
                          verify_invariant_sylow(A.group, A.action), verify_nilpotency_transfer(A.group, A.action),
                          rank_report(A.group, A.action), exponent_relation_report(A.group, A.action)}) {
      EXPECT_EQ(r.status, Status::Pass) << r.check << " at " << p << "^" << k << ": " << r.reason;
    }
    if (A.group.order() <= kExhaustiveCap) {
      const auto r = verify_coverage(A.group, A.action);
      EXPECT_EQ(r.status, Status::Pass) << r.reason;
    }
  }
}

TEST(Verifiers, ExponentRecords) {
  const FieldAction A = build_field_action(2, 3);
  auto r = exponent_relation_report(A.group, A.action);
  EXPECT_EQ(r.details["group_exponent"], 2);
  EXPECT_EQ(r.details["centralizer_H_exponent"], 2);
  const FieldAction B = build_field_action(3, 2);
  r = exponent_relation_report(B.group, B.action);
  EXPECT_EQ(r.details["group_exponent"], 3);
  EXPECT_EQ(r.details["centralizer_H_exponent"], 3);
}

TEST(Verifiers, CoverageCountsInvariantSubgroups) {
  // Invariant subgroups of the additive group of F_8 under F are 0 and F_8.
  const FieldAction A = build_field_action(2, 3);
  EXPECT_EQ(invariant_normal_subgroups(A.group, {A.action.f, A.action.h}).size(), 2u);
  const auto r = verify_coverage(A.group, A.action);
  EXPECT_EQ(r.details["invariant_normal_subgroups"], 2);
}

TEST(Verifiers, TrivialGroup) {
  const FiniteGroup G = cyclic_group(1);
  const FrobeniusAction act{identity_automorphism(G), identity_automorphism(G), {7, 3, 2}};
  const auto r = verify_order_formula(G, act);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(exponent_relation_report(G, act).details["group_exponent"], 1);
}

TEST(Verifiers, InapplicableWithoutFixedPointFreeKernel) {
  // F_4 acting on the first two coordinates of (Z/2)^3, trivially on the third.
  const FieldAction A = build_field_action(2, 2);
  const FiniteGroup G = elementary_abelian_group(2, 3);
  auto extend = [&](const GroupAutomorphism& a) {
    GroupAutomorphism b;
    for (Elem x = 0; x < 8; ++x) b.perm.push_back(a(x & 3) | (x & 4));
    return b;
  };
  const FrobeniusAction act{extend(A.action.f), extend(A.action.h), A.action.params};
  EXPECT_TRUE(validate_action(G, act).structural());
  for (const auto& r : {verify_order_formula(G, act), verify_coverage(G, act), verify_generation(G, act),
                        verify_invariant_sylow(G, act), verify_nilpotency_transfer(G, act)}) {
    EXPECT_EQ(r.status, Status::Inapplicable) << r.check;
    EXPECT_FALSE(r.reason.empty());
  }
}

TEST(Verifiers, RejectsBrokenActions) {
  const FieldAction A = build_field_action(2, 3);
  FrobeniusAction bad = A.action;
  bad.params.r = 4;  // wrong exponent
  ActionValidation v = validate_action(A.group, bad);
  EXPECT_FALSE(v.relation);
  EXPECT_EQ(verify_order_formula(A.group, bad).status, Status::Inapplicable);
  bad = A.action;
  std::swap(bad.f.perm[1], bad.f.perm[2]);
  v = validate_action(A.group, bad);
  EXPECT_FALSE(v.automorphisms);
  EXPECT_FALSE(v.failure.empty());
}

TEST(Automorphisms, ComposeInversePower) {
  const FieldAction A = build_field_action(2, 3);
  const auto& f = A.action.f;
  EXPECT_EQ(compose(f, inverse(f)), identity_automorphism(A.group));
  EXPECT_EQ(power(f, 7), identity_automorphism(A.group));
  EXPECT_EQ(power(f, -1), inverse(f));
  EXPECT_EQ(compose(f, power(f, 2)), power(f, 3));
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(compose(f, A.action.h)(x), A.action.h(f(x)));
}

TEST(FreeModule, SpecCases) {
  const FieldAction A = build_field_action(2, 3);
  const ElementaryCoordinates c = elementary_coordinates(A.group);
  const FreeModuleResult r = free_module_check(2, automorphism_matrix(c, A.action.h), 3);
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.fixed_dimension, 1u);
  ASSERT_EQ(r.invariant_factors.size(), 1u);
  EXPECT_EQ(r.invariant_factors[0], (std::vector<std::int64_t>{1, 0, 0, 1}));  // x^3 + 1 = x^3 - 1 over F_2
  EXPECT_TRUE(r.dimension_equation);

  const FreeModuleResult zero = free_module_check(2, {}, 3);
  EXPECT_TRUE(zero.free);
  EXPECT_EQ(zero.rank, 0u);

  const FreeModuleResult triv = free_module_check(2, {{1}}, 3);
  EXPECT_FALSE(triv.free);
  EXPECT_EQ(triv.invariant_factors[0], (std::vector<std::int64_t>{1, 1}));

  EXPECT_THROW(free_module_check(2, {{0, 1}, {1, 0}}, 3), PreconditionError);
}

TEST(FreeModule, AgreesWithKernelDimensionOracle) {
  std::mt19937 rng(11);
  struct Case {
    std::int64_t p, q;
  };
  for (const Case& cs : {Case{2, 3}, Case{3, 2}, Case{5, 2}, Case{2, 5}, Case{3, 4}, Case{2, 2}, Case{3, 3}}) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::size_t> cycles;
      std::uniform_int_distribution<int> pieces(0, 3);
      const int np = pieces(rng);
      for (int i = 0; i < np; ++i) {
        std::vector<std::size_t> divisors;
        for (std::int64_t d = 1; d <= cs.q; ++d)
          if (cs.q % d == 0) divisors.push_back(static_cast<std::size_t>(d));
        cycles.push_back(divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)]);
      }
      const FpMatrix M = random_module(cycles, cs.p, rng);
      const FreeModuleResult r = free_module_check(cs.p, M, cs.q);
      EXPECT_EQ(r.free, naive_free(M, cs.p, cs.q)) << cs.p << " " << cs.q;
      if (r.free && std::gcd(cs.p, cs.q) == 1) EXPECT_TRUE(r.dimension_equation);
    }
  }
}

TEST(FreeModule, FieldActionsCorpus) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 5}, {3, 3}}) {
    const FieldAction A = build_field_action(p, k);
    const auto c = elementary_coordinates(A.group);
    const auto r = free_module_check(p, automorphism_matrix(c, A.action.h), k);
    EXPECT_TRUE(r.free) << p << "^" << k;
    EXPECT_TRUE(r.dimension_equation);
  }
}

TEST(Filtration, SpecDimensions) {
  EXPECT_EQ(jz_filtration(cyclic_group(4), 2).dimensions(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(jz_filtration(dihedral_group(8), 2).dimensions(), (std::vector<std::size_t>{2, 1}));
  const Filtration D = jz_filtration(dihedral_group(8), 2);
  EXPECT_EQ(D.term(2).elements, (std::vector<Elem>{0, 2}));
  EXPECT_TRUE(jz_filtration(cyclic_group(1), 2).dimensions().empty());
  EXPECT_THROW(jz_filtration(symmetric3(), 2), InputError);
}

TEST(Filtration, AgreesWithDefinition) {
  for (const auto& G : small_p_groups()) {
    const std::int64_t p = prime_of(G);
    const Filtration D = jz_filtration(G, p);
    EXPECT_EQ(D.dimensions(), naive_jz_dimensions(G, p)) << "order " << G.order();
    EXPECT_EQ(check_filtration_laws(G, D).status, Status::Pass);
  }
}

TEST(LazardAlgebra, SpecCases) {
  const DLAlgebra c4 = lazard_algebra(cyclic_group(4), 2);
  EXPECT_EQ(c4.algebra.rank(), 2u);
  EXPECT_EQ(c4.lp_class, std::optional<std::size_t>(1));

  const DLAlgebra d8 = lazard_algebra(dihedral_group(8), 2);
  EXPECT_EQ(d8.algebra.rank(), 3u);
  EXPECT_EQ(d8.lp.rank(), 3u);
  EXPECT_EQ(d8.lp_class, std::optional<std::size_t>(2));
  EXPECT_EQ(d8.well_defined, std::optional<bool>(true));

  const DLAlgebra e4 = lazard_algebra(elementary_abelian_group(2, 2), 2);
  EXPECT_EQ(e4.algebra.rank(), 2u);
  EXPECT_EQ(e4.lp_class, std::optional<std::size_t>(1));
}

TEST(LazardAlgebra, WellDefinedAcrossCorpus) {
  for (const auto& G : small_p_groups()) {
    const DLAlgebra L = lazard_algebra(G, prime_of(G));
    if (G.order() <= 64) EXPECT_EQ(L.well_defined, std::optional<bool>(true)) << G.order();
    std::size_t dim = 0;
    for (auto d : L.filtration.dimensions()) dim += d;
    EXPECT_EQ(L.algebra.rank(), dim);
  }
}

TEST(LazardCheck, PassesOnCorpus) {
  for (const auto& G : small_p_groups()) {
    const auto r = lazard_lemma_check(G, prime_of(G));
    EXPECT_EQ(r.status, Status::Pass) << G.order() << ": " << r.reason;
    EXPECT_EQ(r.details["elements_checked"], G.order());
  }
  const auto q8 = lazard_lemma_check(quaternion_group(), 2);
  EXPECT_LE(q8.details["max_ad_index"].get<std::size_t>(), 4u);
  const auto ab = lazard_lemma_check(elementary_abelian_group(3, 2), 3);
  EXPECT_EQ(ab.status, Status::Pass);
}

TEST(Powerful, SpecCases) {
  EXPECT_FALSE(is_powerful(dihedral_group(8), 2));
  EXPECT_FALSE(is_powerful(quaternion_group(), 2));
  EXPECT_TRUE(is_powerful(cyclic_group(8), 2));
  EXPECT_TRUE(is_powerful(elementary_abelian_group(3, 3), 3));
  EXPECT_FALSE(is_powerful(heisenberg_group(3), 3));
  EXPECT_THROW(is_powerful(symmetric3(), 2), InputError);
}

TEST(Bch, AbelianCaseIsAdditive) {
  const auto ex = example_pm(5, 1);
  const BchGroup P = BchGroup::from_lie(ex.ring);
  EXPECT_EQ(P.order(), 125u);
  EXPECT_EQ(P.lie_class(), 1u);
  EXPECT_TRUE(P.check_associativity());
  for (Elem a = 0; a < P.order(); a += 7) {
    for (Elem b = 0; b < P.order(); b += 3) {
      auto x = P.coords(a), y = P.coords(b);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % 5;
      EXPECT_EQ(P.mul(a, b), P.encode(x));
    }
  }
  const auto r = lazard_example(5, 1);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.centralizer_H_order, 5u);
}

TEST(Bch, ClassTwoCommutatorIsBracket) {
  // For class 2 the group commutator of x and y is the Lie bracket [x, y].
  const auto ex = example_pm(7, 2);
  const BchGroup P = BchGroup::from_lie(ex.ring);
  EXPECT_EQ(P.order(), 117649u);
  EXPECT_EQ(P.lie_class(), 2u);
  EXPECT_TRUE(P.check_associativity(2000));
  std::mt19937 rng(3);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(P.order() - 1));
  for (int t = 0; t < 200; ++t) {
    const Elem a = pick(rng), b = pick(rng);
    const auto x = P.coords(a), y = P.coords(b);
    const auto& L = ex.ring;
    std::vector<std::int64_t> br(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const auto c = static_cast<std::int64_t>(boost::multiprecision::numerator(L.constant(i, j)[k][0]));
          br[k] = ((br[k] + x[i] * y[j] % 49 * c) % 49 + 49) % 49;
        }
    EXPECT_EQ(P.commutator(a, b), P.encode(br));
    EXPECT_EQ(P.mul(a, P.inv(a)), P.identity());
  }
}

TEST(Bch, ExampleFiveSquared) {
  const auto r = lazard_example(5, 2);
  EXPECT_EQ(r.group_order, 15625u);
  EXPECT_TRUE(r.associative);
  EXPECT_TRUE(r.automorphisms);
  EXPECT_TRUE(r.relations);
  EXPECT_EQ(r.centralizer_F_order, 1u);
  EXPECT_TRUE(r.centralizer_H_cyclic);
  EXPECT_EQ(r.centralizer_H_order, 25u);
  EXPECT_EQ(r.centralizer_H_order, r.lie_centralizer_H_order);
  EXPECT_EQ(r.group_class, std::optional<std::size_t>(2));
  EXPECT_TRUE(r.ok());
}

TEST(Bch, ClassThreeIsAssociative) {
  const auto ex = example_pm(5, 3);
  const BchGroup P = BchGroup::from_lie(ex.ring);
  EXPECT_EQ(P.lie_class(), 3u);
  EXPECT_TRUE(P.check_associativity(3000));
}

TEST(Bch, Rejections) {
  EXPECT_THROW(BchGroup::from_lie(example_pm(3, 2).ring), InputError);
  EXPECT_THROW(BchGroup::from_lie(example_pm(5, 4).ring), InputError);
  EXPECT_THROW(BchGroup::from_lie(example_pm(7, 3).ring, 1000), CapacityError);
}
