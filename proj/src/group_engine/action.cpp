#include "flab/group_engine/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flab/errors.hpp"
#include "flab/graded_lie/ring.hpp"
#include "fp_poly.hpp"

namespace flab {

GroupAutomorphism identity_automorphism(const Group& G) {
  GroupAutomorphism a;
  a.perm.resize(G.order());
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

void check_group_automorphism(const Group& G, const GroupAutomorphism& a) {
  const std::size_t n = G.order();
  if (a.perm.size() != n) throw InputError("automorphism has the wrong length");
  std::vector<char> seen(n, 0);
  for (Elem x : a.perm) {
    if (x >= n || seen[x]) throw InputError("automorphism is not a bijection");
    seen[x] = 1;
  }
  // sigma(x g) = sigma(x) sigma(g) on generators g gives it everywhere.
  for (Elem g : G.generators()) {
    for (Elem x = 0; x < n; ++x) {
      if (a(G.mul(x, g)) != G.mul(a(x), a(g))) {
        throw InputError("map is not a homomorphism at (" + std::to_string(x) + "," + std::to_string(g) + ")");
      }
    }
  }
}

GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& second) {
  GroupAutomorphism c;
  c.perm.resize(first.perm.size());
  for (std::size_t x = 0; x < first.perm.size(); ++x) c.perm[x] = second.perm[first.perm[x]];
  return c;
}

GroupAutomorphism inverse(const GroupAutomorphism& a) {
  GroupAutomorphism c;
  c.perm.resize(a.perm.size());
  for (std::size_t x = 0; x < a.perm.size(); ++x) c.perm[a.perm[x]] = static_cast<Elem>(x);
  return c;
}

GroupAutomorphism power(const GroupAutomorphism& a, std::int64_t k) {
  GroupAutomorphism base = k < 0 ? inverse(a) : a;
  if (k < 0) k = -k;
  GroupAutomorphism out;
  out.perm.resize(a.perm.size());
  std::iota(out.perm.begin(), out.perm.end(), 0);
  while (k > 0) {
    if (k & 1) out = compose(out, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return out;
}

std::size_t automorphism_order(const GroupAutomorphism& a) {
  // lcm of cycle lengths
  std::vector<char> seen(a.perm.size(), 0);
  std::size_t order = 1;
  for (std::size_t x = 0; x < a.perm.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = a.perm[y]) {
      seen[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Subgroup fixed_points(const Group& G, const std::vector<GroupAutomorphism>& auts) {
  std::vector<Elem> gens;
  std::vector<Elem> elems;
  for (Elem x = 0; x < G.order(); ++x) {
    bool fixed = std::all_of(auts.begin(), auts.end(), [x](const GroupAutomorphism& a) { return a(x) == x; });
    if (fixed) elems.push_back(x);
  }
  Subgroup acc = trivial_subgroup(G);
  for (Elem x : elems) {
    if (acc.contains(x)) continue;
    gens.push_back(x);
    acc = generate(G, gens);
  }
  return acc;
}

bool is_invariant(const Subgroup& H, const GroupAutomorphism& a) {
  return std::all_of(H.generators.begin(), H.generators.end(), [&](Elem g) { return H.contains(a(g)); });
}

Json ActionValidation::to_json() const {
  Json j = {{"automorphisms", automorphisms}, {"f_order", f_order}, {"h_order", h_order},
            {"relation", relation}, {"frobenius", frobenius}, {"prim", prim}};
  if (!failure.empty()) j["failure"] = failure;
  return j;
}

ActionValidation validate_action(const Group& G, const FrobeniusAction& action) {
  ActionValidation v;
  const auto& prm = action.params;
  try {
    check_group_automorphism(G, action.f);
    check_group_automorphism(G, action.h);
    v.automorphisms = true;
  } catch (const InputError& e) {
    v.failure = e.what();
    return v;
  }
  // On the trivial group every automorphism is the identity, whatever n and q.
  const bool trivial = G.order() == 1;
  v.f_order = prm.n >= 1 && (trivial || automorphism_order(action.f) == static_cast<std::size_t>(prm.n));
  v.h_order = prm.q >= 1 && (trivial || automorphism_order(action.h) == static_cast<std::size_t>(prm.q));
  if (!v.f_order) v.failure = "f does not have order n";
  else if (!v.h_order) v.failure = "h does not have order q";
  const GroupAutomorphism conj = compose(compose(inverse(action.h), action.f), action.h);
  v.relation = v.f_order && conj == power(action.f, prm.r);
  if (v.failure.empty() && !v.relation) v.failure = "h f h^-1 != f^r";
  try {
    v.prim = check_prim(prm);
  } catch (const InputError&) {
    v.prim = false;
  }
  if (v.f_order && v.h_order) {
    v.frobenius = true;
    std::vector<GroupAutomorphism> fj{identity_automorphism(G)};
    for (std::int64_t j = 1; j < prm.n; ++j) fj.push_back(compose(fj.back(), action.f));
    GroupAutomorphism hi = identity_automorphism(G);
    for (std::int64_t i = 1; i < prm.q && v.frobenius; ++i) {
      hi = compose(hi, action.h);
      const GroupAutomorphism hi_inv = inverse(hi);
      for (std::int64_t j = 1; j < prm.n; ++j) {
        if (compose(compose(hi_inv, fj[static_cast<std::size_t>(j)]), hi) == fj[static_cast<std::size_t>(j)]) {
          v.frobenius = false;
          break;
        }
      }
    }
  }
  return v;
}

namespace {

bool irreducible(const fp::Poly& g, std::int64_t p) {
  const std::size_t k = fp::degree(g);
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      fp::Poly m(d + 1, 0);
      m[d] = 1;
      std::int64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        m[i] = c % p;
        c /= p;
      }
      if (fp::mod(g, m, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldAction build_field_action(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw InputError("field action needs p prime, got " + std::to_string(p));
  if (!is_prime(k)) throw InputError("field action needs k prime, got " + std::to_string(k));
  std::int64_t size = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    size *= p;
    if (size > static_cast<std::int64_t>(kGroupTableCap)) throw CapacityError("p^k exceeds the table cap");
  }
  const auto K = static_cast<std::size_t>(k);
  // Least monic irreducible of degree k (coefficients read as base-p digits).
  fp::Poly modulus;
  for (std::int64_t code = 0; code < size && modulus.empty(); ++code) {
    fp::Poly g(K + 1, 0);
    g[K] = 1;
    std::int64_t c = code;
    for (std::size_t i = 0; i < K; ++i) {
      g[i] = c % p;
      c /= p;
    }
    if (irreducible(g, p)) modulus = g;
  }
  auto decode = [&](Elem x) {
    fp::Poly a(K, 0);
    for (std::size_t i = 0; i < K; ++i) {
      a[i] = x % p;
      x /= static_cast<Elem>(p);
    }
    fp::trim(a);
    return a;
  };
  auto encode = [&](const fp::Poly& a) {
    Elem x = 0, place = 1;
    for (std::size_t i = 0; i < K; ++i) {
      if (i < a.size()) x += static_cast<Elem>(a[i]) * place;
      place *= static_cast<Elem>(p);
    }
    return x;
  };
  auto fmul = [&](Elem a, Elem b) { return encode(fp::mod(fp::mul(decode(a), decode(b), p), modulus, p)); };
  const auto n = static_cast<std::size_t>(size);

  FieldAction out{elementary_abelian_group(p, K), {}, {}, modulus, 0};
  const Elem one = 1;
  for (Elem w = 1; w < n; ++w) {
    std::size_t ord = 1;
    for (Elem y = w; y != one; y = fmul(y, w)) ++ord;
    if (ord == n - 1) {
      out.primitive = w;
      break;
    }
  }
  GroupAutomorphism f, h;
  f.perm.resize(n);
  h.perm.resize(n);
  for (Elem x = 0; x < n; ++x) {
    f.perm[x] = fmul(out.primitive, x);
    Elem y = one;
    for (std::int64_t i = 0; i < p; ++i) y = fmul(y, x);
    h.perm[x] = x == 0 ? 0 : y;
  }
  out.action = {std::move(f), std::move(h), {size - 1, k, p}};
  out.validation = validate_action(out.group, out.action);
  return out;
}

namespace {

struct Gate {
  std::optional<VerificationReport> blocked;
  Subgroup cgh;
};

Gate gate(const std::string& check, const FiniteGroup& G, const FrobeniusAction& action) {
  Gate g;
  const ActionValidation v = validate_action(G, action);
  if (!v.structural()) {
    g.blocked = inapplicable_report(check, "action is not valid: " + v.failure, {{"validation", v.to_json()}});
    return g;
  }
  Subgroup cgf = fixed_points(G, {action.f});
  if (!cgf.is_trivial()) {
    g.blocked = inapplicable_report(check, "C_G(F) is not trivial",
                                    {{"centralizer_F_order", cgf.size()}, {"validation", v.to_json()}});
    return g;
  }
  g.cgh = fixed_points(G, {action.h});
  return g;
}

Json elements_json(const std::vector<Elem>& xs) { return Json(xs); }

}  // namespace

VerificationReport verify_order_formula(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "order_formula";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  BigInt rhs = big_pow(BigInt(g.cgh.size()), static_cast<std::uint64_t>(action.params.q));
  Json details = {{"group_order", G.order()}, {"centralizer_H_order", g.cgh.size()}, {"q", action.params.q}};
  if (BigInt(G.order()) != rhs) {
    return violation_report(check, "|G| != |C_G(H)|^q", {{"rhs", to_string(rhs)}}, details);
  }
  return pass_report(check, details);
}

std::vector<Subgroup> invariant_normal_subgroups(const FiniteGroup& G, const std::vector<GroupAutomorphism>& auts,
                                                 std::size_t max_count) {
  if (G.order() > kExhaustiveCap) {
    throw CapacityError("invariant subgroup enumeration is limited to order " + std::to_string(kExhaustiveCap));
  }
  auto closure = [&](std::vector<Elem> gens) {
    Subgroup H = generate(G, gens);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < H.generators.size() && !changed; ++i) {
        std::vector<Elem> images;
        for (Elem t : G.generators()) images.push_back(G.conjugate(H.generators[i], t));
        for (const auto& a : auts) images.push_back(a(H.generators[i]));
        for (Elem y : images) {
          if (!H.contains(y)) {
            gens = H.generators;
            gens.push_back(y);
            H = generate(G, gens);
            changed = true;
            break;
          }
        }
      }
    }
    return H;
  };
  std::vector<Subgroup> singles;
  std::set<std::vector<Elem>> seen_single;
  for (Elem x = 0; x < G.order(); ++x) {
    Subgroup N = closure({x});
    if (seen_single.insert(N.elements).second) singles.push_back(std::move(N));
  }
  std::vector<Subgroup> out{trivial_subgroup(G)};
  std::set<std::vector<Elem>> seen{out[0].elements};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const Subgroup& S : singles) {
      if (is_subset(S, out[k])) continue;
      Subgroup J = join(G, out[k], S);
      if (seen.insert(J.elements).second) {
        if (out.size() >= max_count) throw CapacityError("too many invariant normal subgroups");
        out.push_back(std::move(J));
      }
    }
  }
  return out;
}

VerificationReport verify_coverage(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "coverage";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  auto normals = invariant_normal_subgroups(G, {action.f, action.h});
  std::size_t checked = 0;
  for (const Subgroup& N : normals) {
    // C_N(F) = 1 follows from C_G(F) = 1.
    Quotient Q = quotient(G, N);
    std::set<Elem> lhs, rhs;
    for (Elem c = 0; c < Q.group.order(); ++c) {
      if (Q.coset_of[action.h(Q.representative[c])] == c) lhs.insert(c);
    }
    for (Elem x : g.cgh.elements) rhs.insert(Q.coset_of[x]);
    ++checked;
    if (lhs != rhs) {
      return violation_report(check, "C_{G/N}(H) != C_G(H)N/N",
                              {{"normal_subgroup", elements_json(N.elements)},
                               {"fixed_cosets", lhs.size()},
                               {"image_cosets", rhs.size()}},
                              {{"subgroups_checked", checked}});
    }
  }
  return pass_report(check, {{"invariant_normal_subgroups", checked}});
}

VerificationReport verify_generation(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "generation";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  std::vector<Elem> gens;
  GroupAutomorphism fj = identity_automorphism(G);
  for (std::int64_t j = 0; j < action.params.n; ++j) {
    for (Elem x : g.cgh.generators) gens.push_back(fj(x));
    fj = compose(fj, action.f);
  }
  Subgroup S = generate(G, gens);
  Json details = {{"group_order", G.order()}, {"generated_order", S.size()}};
  if (S.size() != G.order()) {
    return violation_report(check, "<C_G(H)^f : f in F> is a proper subgroup", {{"generated", elements_json(S.elements)}},
                            details);
  }
  return pass_report(check, details);
}

VerificationReport verify_invariant_sylow(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "invariant_sylow";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  Json per_prime = Json::object();
  for (std::int64_t p : prime_divisors(static_cast<std::int64_t>(G.order()))) {
    auto sylows = sylow_subgroups(G, p);
    std::size_t invariant = 0;
    for (const auto& P : sylows) {
      if (is_invariant(P, action.f) && is_invariant(P, action.h)) ++invariant;
    }
    per_prime[std::to_string(p)] = {{"sylow_subgroups", sylows.size()}, {"invariant", invariant}};
    if (invariant != 1) {
      return violation_report(check, "number of FH-invariant Sylow subgroups is not 1",
                              {{"prime", p}, {"invariant", invariant}}, {{"primes", per_prime}});
    }
  }
  return pass_report(check, {{"primes", per_prime}});
}

VerificationReport verify_nilpotency_transfer(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "nilpotency_transfer";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  auto c_class = nilpotency_class(G, g.cgh);
  auto g_class = nilpotency_class(G);
  Json details = {{"centralizer_H_nilpotent", c_class.has_value()}, {"group_nilpotent", g_class.has_value()}};
  if (c_class) details["centralizer_H_class"] = *c_class;
  if (g_class) details["group_class"] = *g_class;
  if (c_class && !g_class) {
    return violation_report(check, "C_G(H) is nilpotent but G is not", {{"centralizer_H_class", *c_class}}, details);
  }
  return pass_report(check, details);
}

VerificationReport rank_report(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "rank";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  const std::size_t rg = group_rank(G, whole_group(G));
  const std::size_t rc = group_rank(G, g.cgh);
  const auto q = static_cast<std::size_t>(action.params.q);
  return pass_report(check, {{"group_rank", rg},
                             {"centralizer_H_rank", rc},
                             {"q", q},
                             {"within_q_times_centralizer_rank", rg <= q * rc}});
}

VerificationReport exponent_relation_report(const FiniteGroup& G, const FrobeniusAction& action) {
  const std::string check = "exponent";
  Gate g = gate(check, G, action);
  if (g.blocked) return *g.blocked;
  return pass_report(check, {{"group_exponent", exponent(G, whole_group(G))},
                             {"centralizer_H_exponent", exponent(G, g.cgh)}});
}

}  // namespace flab
