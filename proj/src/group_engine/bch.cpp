#include "flab/group_engine/bch.hpp"

#include <random>

#include "flab/errors.hpp"
#include "flab/graded_lie/operations.hpp"
#include "flab/graded_lie/ring.hpp"

namespace flab {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = mod_floor(a, m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod_floor(t, m);
}

std::int64_t to_residue(const Rational& r, std::int64_t m) {
  const BigInt num = mod_floor(BigInt(boost::multiprecision::numerator(r)), BigInt(m));
  const BigInt den = mod_floor(BigInt(boost::multiprecision::denominator(r)), BigInt(m));
  const std::int64_t n = static_cast<std::int64_t>(num);
  if (den == 1) return n;
  return static_cast<std::int64_t>((BigInt(n) * inverse_mod(static_cast<std::int64_t>(den), m)) % m);
}

}  // namespace

BchGroup BchGroup::from_lie(const GradedLieRing& L, std::size_t max_order) {
  const CoefficientRing& R = L.ring();
  if (R.kind() != RingKind::IntegersMod && R.kind() != RingKind::PrimeField) {
    throw InputError("BCH groups need a ring Z/p^m, got " + R.name());
  }
  if (R.modulus() > BigInt(3000000000LL)) throw CapacityError("modulus too large for BCH evaluation");
  const auto M = static_cast<std::int64_t>(R.modulus());
  std::int64_t p = 2;
  while (M % p != 0) ++p;
  std::int64_t rest = M;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw InputError("BCH groups need a prime-power modulus, got " + std::to_string(M));
  if (p < 5) throw InputError("BCH groups need p >= 5 so that 2 and 3 are invertible");
  const SubringChain chain = lower_central_series(L);
  auto cls = chain.length();
  if (!cls || *cls > 3) throw InputError("BCH groups need a Lie ring of class at most 3");

  BchGroup G;
  G.rank_ = L.rank();
  G.p_ = p;
  G.m_ = M;
  G.lie_class_ = *cls;
  std::size_t order = 1;
  for (std::size_t i = 0; i < G.rank_; ++i) {
    if (order > max_order / static_cast<std::size_t>(M)) {
      throw CapacityError("BCH group order exceeds " + std::to_string(max_order));
    }
    order *= static_cast<std::size_t>(M);
  }
  G.order_ = order;
  G.half_ = inverse_mod(2, M);
  G.twelfth_ = inverse_mod(12, M);
  G.c_.assign(G.rank_, std::vector<std::vector<std::int64_t>>(G.rank_, std::vector<std::int64_t>(G.rank_, 0)));
  for (std::size_t i = 0; i < G.rank_; ++i) {
    for (std::size_t j = 0; j < G.rank_; ++j) {
      const LieElement& v = L.constant(i, j);
      for (std::size_t k = 0; k < G.rank_; ++k) G.c_[i][j][k] = to_residue(v[k][0], M);
    }
  }
  for (std::size_t i = 0; i < G.rank_; ++i) {
    std::vector<std::int64_t> e(G.rank_, 0);
    e[i] = 1;
    G.generators_.push_back(G.encode(e));
  }
  return G;
}

std::vector<std::int64_t> BchGroup::coords(Elem x) const {
  std::vector<std::int64_t> v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    v[i] = static_cast<std::int64_t>(x % static_cast<Elem>(m_));
    x /= static_cast<Elem>(m_);
  }
  return v;
}

Elem BchGroup::encode(const std::vector<std::int64_t>& v) const {
  Elem x = 0, place = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    x += static_cast<Elem>(mod_floor(v[i], m_)) * place;
    place *= static_cast<Elem>(m_);
  }
  return x;
}

std::vector<std::int64_t> BchGroup::bracket(const std::vector<std::int64_t>& x,
                                            const std::vector<std::int64_t>& y) const {
  std::vector<std::int64_t> out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      const std::int64_t s = x[i] * y[j] % m_;
      for (std::size_t k = 0; k < rank_; ++k) {
        if (c_[i][j][k] != 0) out[k] = (out[k] + s * c_[i][j][k]) % m_;
      }
    }
  }
  return out;
}

Elem BchGroup::mul(Elem a, Elem b) const {
  const auto x = coords(a), y = coords(b);
  const auto xy = bracket(x, y);
  const auto t1 = bracket(x, xy);
  const auto t2 = bracket(y, xy);
  std::vector<std::int64_t> z(rank_);
  for (std::size_t k = 0; k < rank_; ++k) {
    std::int64_t v = x[k] + y[k];
    v += half_ * xy[k] % m_;
    v += twelfth_ * mod_floor(t1[k] - t2[k], m_) % m_;
    z[k] = v % m_;
  }
  return encode(z);
}

Elem BchGroup::inv(Elem a) const {
  auto x = coords(a);
  for (auto& c : x) c = mod_floor(-c, m_);
  return encode(x);
}

GroupAutomorphism BchGroup::transport(const LieAutomorphism& phi) const {
  if (phi.matrix.size() != rank_) throw InputError("automorphism matrix has the wrong size");
  std::vector<std::vector<std::int64_t>> m(rank_, std::vector<std::int64_t>(rank_));
  for (std::size_t u = 0; u < rank_; ++u) {
    for (std::size_t k = 0; k < rank_; ++k) m[u][k] = to_residue(phi.matrix[u][k], m_);
  }
  GroupAutomorphism a;
  a.perm.resize(order_);
  for (Elem x = 0; x < order_; ++x) {
    const auto v = coords(x);
    std::vector<std::int64_t> w(rank_, 0);
    for (std::size_t u = 0; u < rank_; ++u) {
      if (v[u] == 0) continue;
      for (std::size_t k = 0; k < rank_; ++k) w[k] = (w[k] + v[u] * m[u][k]) % m_;
    }
    a.perm[x] = encode(w);
  }
  return a;
}

bool BchGroup::check_associativity(std::size_t samples) const {
  auto assoc = [&](Elem a, Elem b, Elem c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (order_ <= kExhaustiveCap) {
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) {
        for (Elem c = 0; c < order_; ++c) {
          if (!assoc(a, b, c)) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(order_);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
  for (std::size_t t = 0; t < samples; ++t) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

bool LazardExampleReport::ok() const {
  std::size_t expected = 1;
  for (std::int64_t i = 0; i < 3 * m; ++i) expected *= static_cast<std::size_t>(p);
  return group_order == expected && associative && automorphisms && relations && centralizer_F_order == 1 &&
         centralizer_H_cyclic && centralizer_H_order == lie_centralizer_H_order && group_class &&
         *group_class == lie_class;
}

Json LazardExampleReport::to_json() const {
  Json j = {{"p", p},
            {"m", m},
            {"group_order", group_order},
            {"associative", associative},
            {"automorphisms", automorphisms},
            {"relations", relations},
            {"centralizer_F_order", centralizer_F_order},
            {"centralizer_H_order", centralizer_H_order},
            {"lie_centralizer_H_order", lie_centralizer_H_order},
            {"centralizer_H_cyclic", centralizer_H_cyclic},
            {"lie_class", lie_class}};
  j["group_class"] = group_class ? Json(*group_class) : Json(nullptr);
  return j;
}

LazardExampleReport lazard_example(std::int64_t p, std::int64_t m) {
  const FrobeniusLieExample ex = example_pm(p, m);
  const BchGroup P = BchGroup::from_lie(ex.ring);
  LazardExampleReport r;
  r.p = p;
  r.m = m;
  r.group_order = P.order();
  r.lie_class = P.lie_class();
  r.associative = P.check_associativity();
  std::vector<GroupAutomorphism> f;
  for (const auto& fi : ex.f) f.push_back(P.transport(fi));
  const GroupAutomorphism h = P.transport(ex.h);
  r.automorphisms = true;
  try {
    for (const auto& a : f) check_group_automorphism(P, a);
    check_group_automorphism(P, h);
  } catch (const InputError&) {
    r.automorphisms = false;
  }
  r.relations = true;
  const GroupAutomorphism h_inv = inverse(h);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(compose(compose(h_inv, f[i]), h) == f[(i + 1) % f.size()])) r.relations = false;
  }
  r.centralizer_F_order = fixed_points(P, f).size();
  const Subgroup cph = fixed_points(P, {h});
  r.centralizer_H_order = cph.size();
  r.centralizer_H_cyclic = is_cyclic(P, cph);
  const auto lie_fixed = fixed_subring(ex.ring, {ex.h}).order();
  r.lie_centralizer_H_order = lie_fixed ? static_cast<std::size_t>(*lie_fixed) : 0;
  r.group_class = nilpotency_class(P);
  return r;
}

}  // namespace flab
