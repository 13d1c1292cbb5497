#include "flab/group_engine/filtration.hpp"

#include <map>

#include "flab/errors.hpp"
#include "flab/graded_lie/ring.hpp"

namespace flab {

const Subgroup& Filtration::term(std::size_t i) const {
  if (i == 0) throw InputError("filtration terms start at D_1");
  if (i > terms.size()) return terms.back();
  return terms[i - 1];
}

std::vector<std::size_t> Filtration::dimensions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    std::size_t index = terms[i].size() / terms[i + 1].size(), d = 0;
    while (index > 1) {
      index /= static_cast<std::size_t>(p);
      ++d;
    }
    out.push_back(d);
  }
  return out;
}

namespace {

std::int64_t require_p_group(const Group& G, std::int64_t p) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  auto q = p_group_prime(whole_group(G));
  if (!q || (*q != 1 && *q != p)) {
    throw InputError("group of order " + std::to_string(G.order()) + " is not a " + std::to_string(p) + "-group");
  }
  return p;
}

}  // namespace

Filtration jz_filtration(const Group& G, std::int64_t p) {
  require_p_group(G, p);
  Filtration D;
  D.p = p;
  if (G.order() == 1) return D;
  const auto gammas = lower_central_series(G);  // ends with the trivial group
  std::map<std::pair<std::size_t, std::int64_t>, Subgroup> powers;
  auto power_of = [&](std::size_t j, std::int64_t pk) -> const Subgroup& {
    auto key = std::make_pair(j, pk);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, power_subgroup(G, gammas[j - 1], pk)).first;
    return it->second;
  };
  for (std::size_t i = 1;; ++i) {
    Subgroup Di = trivial_subgroup(G);
    for (std::size_t j = 1; j < gammas.size(); ++j) {
      // least p^k with j p^k >= i
      std::int64_t pk = 1;
      while (static_cast<std::int64_t>(j) * pk < static_cast<std::int64_t>(i)) pk *= p;
      if (pk > static_cast<std::int64_t>(G.order())) continue;
      Di = join(G, Di, power_of(j, pk));
    }
    D.terms.push_back(Di);
    if (Di.is_trivial()) break;
  }
  return D;
}

VerificationReport check_filtration_laws(const Group& G, const Filtration& D) {
  const std::string check = "filtration_laws";
  const std::size_t L = D.length();
  for (std::size_t i = 1; i < L; ++i) {
    if (!is_subset(D.term(i + 1), D.term(i))) {
      return violation_report(check, "D_{i+1} is not contained in D_i", {{"i", i}});
    }
    for (std::size_t j = i; j < L; ++j) {
      if (!is_subset(commutator_subgroup(G, D.term(i), D.term(j)), D.term(i + j))) {
        return violation_report(check, "[D_i, D_j] is not contained in D_{i+j}", {{"i", i}, {"j", j}});
      }
    }
    if (!is_subset(power_subgroup(G, D.term(i), D.p), D.term(static_cast<std::size_t>(D.p) * i))) {
      return violation_report(check, "D_i^p is not contained in D_{pi}", {{"i", i}});
    }
  }
  return pass_report(check, {{"length", L}, {"dimensions", D.dimensions()}});
}

Vec DLAlgebra::image(Elem x, std::size_t k) const {
  Vec v(algebra.base_dim(), Rational(0));
  if (k == 0) throw InputError("degrees start at 1");
  if (k >= filtration.length()) {
    if (x != filtration.terms.back().elements.front()) throw std::logic_error("element outside D_k");
    return v;
  }
  const int c = coset_index[k][x];
  if (c < 0) throw std::logic_error("element outside D_k");
  const auto& digits = coords[k][static_cast<std::size_t>(c)];
  for (std::size_t a = 0; a < digits.size(); ++a) v[offset[k] + a] = Rational(digits[a]);
  return v;
}

std::size_t DLAlgebra::degree_of(Elem x) const {
  std::size_t k = 0;
  while (k + 1 < filtration.length() && filtration.terms[k].contains(x)) ++k;
  if (k + 1 == filtration.length() && filtration.terms[k].contains(x)) return 0;  // identity
  return k;
}

DLAlgebra lazard_algebra(const FiniteGroup& G, std::int64_t p) {
  Filtration D = jz_filtration(G, p);
  const std::size_t L = D.length();
  const CoefficientRing field = CoefficientRing::prime_field(p);

  std::vector<std::vector<int>> coset_index(L > 0 ? L : 1);
  std::vector<std::vector<std::vector<std::int64_t>>> coords(L > 0 ? L : 1);
  std::vector<std::size_t> offset(L > 0 ? L : 1, 0);
  std::vector<std::size_t> degree_of_basis;
  std::vector<Elem> reps;
  for (std::size_t k = 1; k < L; ++k) {
    const Subgroup& Dk = D.term(k);
    const Subgroup& Dn = D.term(k + 1);
    offset[k] = reps.size();
    Subgroup acc = Dn;
    std::vector<Elem> basis;
    for (Elem x : Dk.elements) {
      if (acc.contains(x)) continue;
      basis.push_back(x);
      auto gens = acc.generators;
      gens.push_back(x);
      acc = generate(G, gens);
    }
    for (Elem b : basis) {
      reps.push_back(b);
      degree_of_basis.push_back(k);
    }
    coset_index[k].assign(G.order(), -1);
    std::vector<std::int64_t> digits(basis.size(), 0);
    while (true) {
      Elem y = G.identity();
      for (std::size_t a = 0; a < basis.size(); ++a) y = G.mul(y, G.pow(basis[a], digits[a]));
      const int id = static_cast<int>(coords[k].size());
      coords[k].push_back(digits);
      for (Elem n : Dn.elements) coset_index[k][G.mul(y, n)] = id;
      std::size_t a = 0;
      while (a < basis.size() && ++digits[a] == p) digits[a++] = 0;
      if (a == basis.size()) break;
    }
  }

  const std::size_t dim = reps.size();
  Grading grading;
  for (std::size_t d : degree_of_basis) grading.degrees.push_back(static_cast<std::int64_t>(d));
  std::vector<std::vector<LieElement>> constants(dim, std::vector<LieElement>(dim, LieElement(dim, field.zero())));
  DLAlgebra out{D, GradedLieRing::abelian(field, dim, grading), degree_of_basis, reps, Submodule(), std::nullopt,
                std::nullopt, coset_index, coords, offset};
  for (std::size_t u = 0; u < dim; ++u) {
    for (std::size_t v = 0; v < dim; ++v) {
      const std::size_t k = degree_of_basis[u] + degree_of_basis[v];
      Vec img = out.image(G.commutator(reps[u], reps[v]), k);
      for (std::size_t w = 0; w < dim; ++w) constants[u][v][w] = field.from_rational(img[w]);
    }
  }
  out.algebra = GradedLieRing(field, dim, constants, grading);
  const GradedLieRing& A = out.algebra;

  std::vector<Vec> first;
  for (std::size_t u = 0; u < dim; ++u) {
    if (degree_of_basis[u] == 1) first.push_back(A.base_unit(u));
  }
  Submodule lp = A.span(first);
  while (true) {
    Submodule next = lp.join(A.bracket(lp, lp));
    if (next == lp) break;
    lp = next;
  }
  out.lp = lp;
  Submodule gamma = lp;
  std::size_t cls = 0;
  while (!gamma.is_zero()) {
    Submodule next = A.bracket(gamma, lp);
    if (next == gamma) break;
    gamma = next;
    ++cls;
  }
  if (gamma.is_zero()) out.lp_class = cls;

  if (G.order() <= 64) {
    bool ok = true;
    for (std::size_t i = 1; i < L && ok; ++i) {
      for (std::size_t j = 1; j < L && ok; ++j) {
        for (Elem x : D.term(i).elements) {
          for (Elem y : D.term(j).elements) {
            Vec lhs = A.domain().reduce(out.image(G.commutator(x, y), i + j));
            Vec rhs = A.domain().reduce(A.bracket(out.image(x, i), out.image(y, j)));
            if (lhs != rhs) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    out.well_defined = ok;
  }
  return out;
}

namespace {

using FpMat = std::vector<std::vector<std::int64_t>>;

FpMat ad_matrix(const DLAlgebra& dl, const Vec& v, std::int64_t p) {
  const GradedLieRing& A = dl.algebra;
  const std::size_t n = A.base_dim();
  FpMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    Vec w = A.bracket(v, A.base_unit(u));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& r = w[j];
      BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
      BigInt val = mod_floor(num, BigInt(p));
      if (den != 1) {
        BigInt inv = 1, d = mod_floor(den, BigInt(p));
        for (std::int64_t e = 0; e < p - 2; ++e) inv = (inv * d) % p;
        val = (val * inv) % p;
      }
      // column u of ad(v): ad(v)(e_u) = [v, e_u]
      m[j][u] = static_cast<std::int64_t>(val);
    }
  }
  return m;
}

FpMat fp_mul(const FpMat& a, const FpMat& b, std::int64_t p) {
  const std::size_t n = a.size();
  FpMat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  }
  return c;
}

bool fp_zero(const FpMat& a) {
  for (const auto& row : a) {
    for (auto x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

}  // namespace

VerificationReport lazard_lemma_check(const FiniteGroup& G, std::int64_t p) {
  const std::string check = "lazard_lemma";
  DLAlgebra dl = lazard_algebra(G, p);
  const std::size_t n = dl.algebra.base_dim();
  std::size_t checked = 0, max_index = 0;
  for (Elem x = 0; x < G.order(); ++x) {
    if (x == G.identity()) {
      // ad of the zero image is zero on both sides, index 1.
      max_index = std::max<std::size_t>(max_index, 1);
      ++checked;
      continue;
    }
    const std::size_t i = dl.degree_of(x);
    const Elem xp = G.pow(x, p);
    const std::size_t k = static_cast<std::size_t>(p) * i;
    if (!dl.filtration.term(k).contains(xp)) {
      return violation_report(check, "x^p is not in D_{p deg x}", {{"element", x}, {"degree", i}});
    }
    const FpMat ad = ad_matrix(dl, dl.image(x, i), p);
    FpMat adp = ad;
    for (std::int64_t e = 1; e < p; ++e) adp = fp_mul(adp, ad, p);
    if (adp != ad_matrix(dl, dl.image(xp, k), p)) {
      return violation_report(check, "(ad x)^p != ad(x^p)", {{"element", x}, {"degree", i}});
    }
    // Nilpotency index against the order p^t of x.
    std::size_t index = 0;
    FpMat pw(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t d = 0; d < n; ++d) pw[d][d] = 1;
    while (!fp_zero(pw) && index <= n + 1) {
      pw = fp_mul(pw, ad, p);
      ++index;
    }
    const std::size_t order = G.element_order(x);
    if (index > order) {
      return violation_report(check, "ad x is not nilpotent of index at most the order of x",
                              {{"element", x}, {"index", index}, {"order", order}});
    }
    max_index = std::max(max_index, index);
    ++checked;
  }
  Json details = {{"elements_checked", checked}, {"max_ad_index", max_index}, {"dimension", n}};
  if (dl.well_defined) details["well_defined"] = *dl.well_defined;
  if (dl.well_defined && !*dl.well_defined) {
    return violation_report(check, "bracket depends on coset representatives", nullptr, details);
  }
  return pass_report(check, details);
}

bool is_powerful(const Group& G, std::int64_t p) {
  require_p_group(G, p);
  Subgroup all = whole_group(G);
  Subgroup comm = commutator_subgroup(G, all, all);
  Subgroup pw = power_subgroup(G, all, p == 2 ? 4 : p);
  return is_subset(comm, pw);
}

}  // namespace flab
