#include "flab/group_engine/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "flab/errors.hpp"

namespace flab {

Elem Group::pow(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Elem Group::commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

Elem Group::conjugate(Elem a, Elem b) const { return mul(mul(inv(b), a), b); }

std::size_t Group::element_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

namespace {

std::vector<Elem> greedy_generators(const Group& G) {
  std::vector<Elem> gens;
  std::vector<char> in(G.order(), 0);
  in[G.identity()] = 1;
  std::size_t covered = 1;
  for (Elem x = 0; x < G.order() && covered < G.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    Subgroup H = generate(G, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Elem y : H.elements) in[y] = 1;
    covered = H.size();
  }
  return gens;
}

}  // namespace

void FiniteGroup::finish() {
  const std::size_t n = table_.size();
  inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
  generators_ = greedy_generators(*this);
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("a group table needs at least one element");
  if (n > kGroupTableCap) {
    throw CapacityError("group order " + std::to_string(n) + " exceeds the table cap " + std::to_string(kGroupTableCap));
  }
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    std::vector<char> seen(n, 0);
    for (Elem x : row) {
      if (x >= n) throw InputError("group table entry out of range");
      if (seen[x]) throw InputError("group table row is not a permutation");
      seen[x] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw InputError("group table column is not a permutation");
      seen[table[i][j]] = 1;
    }
  }
  std::optional<Elem> e;
  for (Elem a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[a][x] == x && table[x][a] == x;
    if (ok) e = a;
  }
  if (!e) throw InputError("group table has no identity");
  auto assoc = [&](Elem a, Elem b, Elem c) { return table[table[a][b]][c] == table[a][table[b][c]]; };
  if (n <= kExhaustiveCap) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (!assoc(a, b, c)) {
            throw InputError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int t = 0; t < 200000; ++t) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) throw InputError("group table is not associative");
    }
  }
  FiniteGroup G;
  G.table_ = std::move(table);
  G.identity_ = *e;
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw InputError("permutation has the wrong degree");
    std::vector<char> seen(degree, 0);
    for (std::size_t x : g) {
      if (x >= degree || seen[x]) throw InputError("generator is not a permutation");
      seen[x] = 1;
    }
  }
  using Perm = std::vector<std::size_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  // (a b)(i) = b(a(i)): apply a first.
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      Perm c = compose(elems[k], g);
      if (index.count(c)) continue;
      if (elems.size() >= kGroupTableCap) {
        throw CapacityError("permutation group exceeds the table cap " + std::to_string(kGroupTableCap));
      }
      index.emplace(c, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(c));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  }
  FiniteGroup G;
  G.table_ = std::move(table);
  G.identity_ = 0;
  G.perms_ = std::move(elems);
  G.finish();
  return G;
}

namespace {

FiniteGroup table_group(std::size_t n, const std::function<Elem(Elem, Elem)>& op) {
  if (n > kGroupTableCap) throw CapacityError("group order " + std::to_string(n) + " exceeds the table cap");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t[a][b] = op(a, b);
  }
  return FiniteGroup::from_table(std::move(t));
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group needs n >= 1");
  return table_group(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); });
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw InputError("dihedral group needs an even order >= 2");
  const std::size_t m = order / 2;
  return table_group(order, [m](Elem a, Elem b) {
    std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
    std::size_t r = j == 0 ? (i + k) % m : (i + m - k) % m;
    return static_cast<Elem>(r + m * ((j + l) % 2));
  });
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k as 0..3; id = unit + 4 * (negative).
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return table_group(8, [](Elem a, Elem b) {
    int s = sign[a % 4][b % 4] * ((a / 4) ? -1 : 1) * ((b / 4) ? -1 : 1);
    return static_cast<Elem>(unit[a % 4][b % 4] + (s < 0 ? 4 : 0));
  });
}

FiniteGroup elementary_abelian_group(std::int64_t p, std::size_t k) {
  if (p < 2) throw InputError("elementary abelian group needs p >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= static_cast<std::size_t>(p);
    if (n > kGroupTableCap) throw CapacityError("elementary abelian group exceeds the table cap");
  }
  const auto P = static_cast<Elem>(p);
  return table_group(n, [P, k](Elem a, Elem b) {
    Elem out = 0, place = 1;
    for (std::size_t i = 0; i < k; ++i) {
      out += ((a % P + b % P) % P) * place;
      a /= P;
      b /= P;
      place *= P;
    }
    return out;
  });
}

FiniteGroup heisenberg_group(std::int64_t p) {
  if (p < 2) throw InputError("heisenberg group needs p >= 2");
  const auto P = static_cast<Elem>(p);
  return table_group(static_cast<std::size_t>(p * p * p), [P](Elem x, Elem y) {
    Elem a = x % P, b = (x / P) % P, c = x / (P * P);
    Elem a2 = y % P, b2 = (y / P) % P, c2 = y / (P * P);
    return (a + a2) % P + P * ((b + b2) % P) + P * P * ((c + c2 + a * b2) % P);
  });
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subgroup whole_group(const Group& G) {
  Subgroup H;
  H.elements.resize(G.order());
  std::iota(H.elements.begin(), H.elements.end(), 0);
  H.generators = G.generators();
  return H;
}

Subgroup trivial_subgroup(const Group& G) { return {{G.identity()}, {}}; }

Subgroup generate(const Group& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> elems{G.identity()};
  seen[G.identity()] = 1;
  std::vector<Elem> useful;
  for (Elem g : gens) {
    if (g != G.identity() && std::find(useful.begin(), useful.end(), g) == useful.end()) useful.push_back(g);
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (Elem g : useful) {
      Elem y = G.mul(elems[k], g);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {std::move(elems), std::move(useful)};
}

Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return generate(G, gens);
}

namespace {

// Smallest subgroup containing gens and closed under conjugation by the
// given elements.
Subgroup conjugation_closure(const Group& G, std::vector<Elem> gens, const std::vector<Elem>& by) {
  Subgroup H = generate(G, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < H.generators.size() && !changed; ++i) {
      for (Elem t : by) {
        Elem c = G.conjugate(H.generators[i], t);
        if (!H.contains(c)) {
          gens = H.generators;
          gens.push_back(c);
          H = generate(G, gens);
          changed = true;
          break;
        }
      }
    }
  }
  return H;
}

}  // namespace

Subgroup normal_closure(const Group& G, const std::vector<Elem>& gens) {
  return conjugation_closure(G, gens, G.generators());
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

bool is_normal(const Group& G, const Subgroup& H) {
  for (Elem h : H.generators) {
    for (Elem t : G.generators()) {
      if (!H.contains(G.conjugate(h, t))) return false;
    }
  }
  return true;
}

Subgroup commutator_subgroup(const Group& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> gens;
  for (Elem a : A.generators) {
    for (Elem b : B.generators) gens.push_back(G.commutator(a, b));
  }
  std::vector<Elem> by = A.generators;
  by.insert(by.end(), B.generators.begin(), B.generators.end());
  return conjugation_closure(G, gens, by);
}

Subgroup power_subgroup(const Group& G, const Subgroup& A, std::int64_t k) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> gens;
  for (Elem a : A.elements) {
    Elem x = G.pow(a, k);
    if (!seen[x]) {
      seen[x] = 1;
      gens.push_back(x);
    }
  }
  // Keep a short generating set.
  std::vector<Elem> small;
  Subgroup H = trivial_subgroup(G);
  for (Elem x : gens) {
    if (H.contains(x)) continue;
    small.push_back(x);
    H = generate(G, small);
  }
  return H;
}

Subgroup centralizer(const Group& G, const Subgroup& A) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elem a : A.generators) {
      if (G.mul(x, a) != G.mul(a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  Subgroup H;
  H.elements = out;
  // Generators from a greedy pass.
  Subgroup acc = trivial_subgroup(G);
  for (Elem x : out) {
    if (acc.contains(x)) continue;
    H.generators.push_back(x);
    acc = generate(G, H.generators);
  }
  return H;
}

Subgroup center(const Group& G) { return centralizer(G, whole_group(G)); }

Subgroup normalizer(const Group& G, const Subgroup& H) {
  std::vector<Elem> gens;
  Subgroup acc = trivial_subgroup(G);
  for (Elem x = 0; x < G.order(); ++x) {
    if (acc.contains(x)) continue;
    bool ok = true;
    for (Elem h : H.generators) {
      if (!H.contains(G.conjugate(h, x))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gens.push_back(x);
      acc = generate(G, gens);
    }
  }
  return acc;
}

namespace {

std::vector<Subgroup> lower_central_in(const Group& G, const Subgroup& H) {
  std::vector<Subgroup> out{H};
  while (true) {
    Subgroup next = commutator_subgroup(G, out.back(), H);
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<Subgroup> lower_central_series(const Group& G) { return lower_central_in(G, whole_group(G)); }

std::vector<Subgroup> derived_series(const Group& G) {
  std::vector<Subgroup> out{whole_group(G)};
  while (true) {
    Subgroup next = commutator_subgroup(G, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::optional<std::size_t> nilpotency_class(const Group& G, const Subgroup& H) {
  auto series = lower_central_in(G, H);
  if (!series.back().is_trivial()) return std::nullopt;
  return series.size() - 1;
}

std::optional<std::size_t> nilpotency_class(const Group& G) { return nilpotency_class(G, whole_group(G)); }

std::size_t exponent(const Group& G, const Subgroup& H) {
  std::size_t e = 1;
  for (Elem x : H.elements) e = std::lcm(e, G.element_order(x));
  return e;
}

bool is_abelian(const Group& G, const Subgroup& H) {
  for (Elem a : H.generators) {
    for (Elem b : H.generators) {
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const Group& G, const Subgroup& H) {
  for (Elem x : H.elements) {
    if (G.element_order(x) == H.size()) return true;
  }
  return false;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::int64_t> p_group_prime(const Subgroup& H) {
  const auto n = static_cast<std::int64_t>(H.size());
  if (n == 1) return 1;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& G, std::int64_t p) {
  std::size_t target = 1;
  std::size_t n = G.order();
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    target *= static_cast<std::size_t>(p);
  }
  auto p_power_order = [&](Elem x) {
    std::size_t o = G.element_order(x);
    while (o % static_cast<std::size_t>(p) == 0) o /= static_cast<std::size_t>(p);
    return o == 1;
  };
  Subgroup P = trivial_subgroup(G);
  while (P.size() < target) {
    Subgroup N = normalizer(G, P);
    bool grown = false;
    for (Elem x : N.elements) {
      if (P.contains(x) || !p_power_order(x)) continue;
      auto gens = P.generators;
      gens.push_back(x);
      P = generate(G, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow search stalled");
  }
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<Elem> gens;
    for (Elem x : P.generators) gens.push_back(G.conjugate(x, g));
    Subgroup Q = generate(G, gens);
    if (seen.insert(Q.elements).second) out.push_back(std::move(Q));
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, std::size_t max_count) {
  if (G.order() > kExhaustiveCap) {
    throw CapacityError("subgroup enumeration is limited to order " + std::to_string(kExhaustiveCap));
  }
  std::vector<Subgroup> cyclic;
  std::set<std::vector<Elem>> seen_cyclic;
  for (Elem x = 0; x < G.order(); ++x) {
    Subgroup C = generate(G, {x});
    if (seen_cyclic.insert(C.elements).second) cyclic.push_back(std::move(C));
  }
  std::vector<Subgroup> out{trivial_subgroup(G)};
  std::set<std::vector<Elem>> seen{out[0].elements};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const Subgroup& C : cyclic) {
      if (is_subset(C, out[k])) continue;
      Subgroup J = join(G, out[k], C);
      if (seen.insert(J.elements).second) {
        if (out.size() >= max_count) throw CapacityError("more than " + std::to_string(max_count) + " subgroups");
        out.push_back(std::move(J));
      }
    }
  }
  return out;
}

std::size_t min_generators(const FiniteGroup& G, const Subgroup& H) {
  if (H.is_trivial()) return 0;
  if (auto p = p_group_prime(H)) {
    // Burnside basis theorem: d(H) = dim H / Phi(H).
    Subgroup phi = join(G, power_subgroup(G, H, *p), commutator_subgroup(G, H, H));
    std::size_t index = H.size() / phi.size(), d = 0;
    while (index > 1) {
      index /= static_cast<std::size_t>(*p);
      ++d;
    }
    return d;
  }
  std::vector<Elem> pool;
  for (Elem x : H.elements) {
    if (x != G.identity()) pool.push_back(x);
  }
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::size_t tried = 0;
    while (true) {
      std::vector<Elem> gens;
      for (std::size_t i : idx) gens.push_back(pool[i]);
      if (generate(G, gens).size() == H.size()) return k;
      if (++tried > 2000000) throw CapacityError("generator search too large");
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

SubgroupGroup as_group(const FiniteGroup& G, const Subgroup& H) {
  std::map<Elem, Elem> local;
  for (std::size_t i = 0; i < H.elements.size(); ++i) local[H.elements[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> t(H.size(), std::vector<Elem>(H.size()));
  for (std::size_t i = 0; i < H.size(); ++i) {
    for (std::size_t j = 0; j < H.size(); ++j) t[i][j] = local.at(G.mul(H.elements[i], H.elements[j]));
  }
  return {FiniteGroup::from_table(std::move(t)), H.elements};
}

std::size_t group_rank(const FiniteGroup& G, const Subgroup& H) {
  SubgroupGroup K = as_group(G, H);
  std::size_t best = 0;
  for (const Subgroup& S : all_subgroups(K.group)) best = std::max(best, min_generators(K.group, S));
  return best;
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw PreconditionError("quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  std::vector<Elem> coset(n, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != static_cast<Elem>(-1)) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : N.elements) coset[G.mul(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) t[a][b] = coset[G.mul(reps[a], reps[b])];
  }
  return {FiniteGroup::from_table(std::move(t)), std::move(coset), std::move(reps)};
}

}  // namespace flab
