#include "flab/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flab/cli/json_io.hpp"
#include "flab/combinatorics/combinatorics.hpp"
#include "flab/errors.hpp"
#include "flab/free_lie/hall.hpp"
#include "flab/free_lie/rewriting.hpp"
#include "flab/graded_lie/examples.hpp"
#include "flab/graded_lie/operations.hpp"
#include "flab/group_engine/bch.hpp"
#include "flab/group_engine/filtration.hpp"
#include "flab/group_engine/module.hpp"

namespace flab::cli {

namespace {

using Reports = std::vector<VerificationReport>;

VerificationReport error_report(const std::string& check, Status status, const std::string& reason) {
  VerificationReport r;
  r.check = check;
  r.status = status;
  r.reason = reason;
  return r;
}

FrobeniusParams params_of(std::int64_t n, std::int64_t q, std::int64_t r) {
  FrobeniusParams p{n, q, r};
  p.check_well_formed();
  return p;
}

void add_params(CLI::App* sub, std::int64_t& n, std::int64_t& q, std::int64_t& r) {
  sub->add_option("--n", n, "order of the kernel")->required();
  sub->add_option("--q", q, "order of the complement")->required();
  sub->add_option("--r", r, "action exponent")->required();
}

IndexedGenerator parse_generator(const std::string& text) {
  const Bracket b = parse_bracket(text);
  if (!b.is_letter()) throw InputError("expected a generator name@index, got '" + text + "'");
  return b.generator();
}

std::vector<IndexedGenerator> parse_generators(const std::vector<std::string>& items) {
  std::vector<IndexedGenerator> out;
  for (const auto& s : items) out.push_back(parse_generator(s));
  return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

// ---------------------------------------------------------------- lie

struct LieSource {
  std::string file;
  std::string example;
  std::string ring = "Q";
  std::int64_t p = 5;
  std::int64_t m = 1;
};

void add_lie_source(CLI::App* sub, LieSource& s) {
  sub->add_option("--file", s.file, "Lie ring JSON file");
  sub->add_option("--example", s.example, "simple3 or pm");
  sub->add_option("--ring", s.ring, "coefficient ring for simple3 (Z, Q, Z/m, Fp, Z[wn])");
  sub->add_option("--p", s.p, "prime for pm");
  sub->add_option("--m", s.m, "exponent for pm");
}

LieInput load_lie(const LieSource& s) {
  if (!s.file.empty() && !s.example.empty()) throw InputError("give either --file or --example");
  if (!s.file.empty()) return lie_from_json(read_json_file(s.file));
  FrobeniusLieExample ex = [&] {
    if (s.example == "simple3") return example_simple3(ring_from_string(s.ring));
    if (s.example == "pm") return example_pm(s.p, s.m);
    throw InputError("need --file or --example simple3|pm");
  }();
  LieInput in{std::move(ex.ring), {}};
  for (std::size_t i = 0; i < ex.f.size(); ++i) in.automorphisms.emplace("f" + std::to_string(i + 1), ex.f[i]);
  in.automorphisms.emplace("h", ex.h);
  return in;
}

Json submodule_size(const Submodule& S) {
  const auto o = S.order();
  if (o) return integer_to_json(*o);
  return Json(S.rank());
}

VerificationReport lie_validate(const LieInput& in) {
  const auto v = validate(in.ring);
  Json details = {{"ring", ring_to_string(in.ring.ring())}, {"rank", in.ring.rank()}, {"valid", v.ok}};
  Json auts = Json::object();
  std::string bad;
  for (const auto& [name, phi] : in.automorphisms) {
    const auto a = check_automorphism(in.ring, phi);
    auts[name] = a.ok;
    if (!a.ok && bad.empty()) bad = name + ": " + a.failure;
  }
  if (!in.automorphisms.empty()) details["automorphisms"] = auts;
  if (!v.ok) return violation_report("lie_validate", "ring fails " + v.failure, v.witness, details);
  if (!bad.empty()) return violation_report("lie_validate", "automorphism fails", bad, details);
  return pass_report("lie_validate", details);
}

VerificationReport lie_series(const LieInput& in) {
  const auto lcs = lower_central_series(in.ring);
  const auto der = derived_series(in.ring);
  Json l = Json::array(), d = Json::array();
  for (const auto& t : lcs.terms) l.push_back(submodule_size(t));
  for (const auto& t : der.terms) d.push_back(submodule_size(t));
  Json details = {{"lower_central_sizes", l}, {"derived_sizes", d}};
  const auto c = lcs.length();
  details["nilpotency_class"] = c ? Json(*c) : Json(nullptr);
  const auto dl = der.length();
  details["derived_length"] = dl ? Json(*dl) : Json(nullptr);
  return pass_report("lie_series", details);
}

Submodule span_of_sum(const GradedLieRing& L) {
  LieElement v(L.rank(), L.ring().one());
  return L.span({L.to_base(v)});
}

// C_L(F) = 0, dim C_L(H) = 1 and L = [L, L].
VerificationReport example1_report(const CoefficientRing& ring) {
  const auto ex = example_simple3(ring);
  const auto& L = ex.ring;
  const Submodule cf = fixed_subring(L, ex.f);
  const Submodule ch = fixed_subring(L, {ex.h});
  const bool perfect = L.bracket(L.whole(), L.whole()) == L.whole();
  Json details = {{"ring", ring_to_string(ring)},
                  {"centralizer_F_zero", cf == L.zero_submodule()},
                  {"centralizer_H_rank", ch.rank()},
                  {"centralizer_H_is_diagonal", ch == span_of_sum(L)},
                  {"perfect", perfect}};
  if (!(cf == L.zero_submodule()) || ch.rank() != 1 || !perfect) {
    return violation_report("example1", "simple3 does not behave as stated", ring_to_string(ring), details);
  }
  return pass_report("example1", details);
}

// C_L(F) = 0, C_L(H) = span{e1+e2+e3}, class exactly m.
VerificationReport example2_report(std::int64_t p, std::int64_t m) {
  const auto ex = example_pm(p, m);
  const auto& L = ex.ring;
  const Submodule cf = fixed_subring(L, ex.f);
  const Submodule ch = fixed_subring(L, {ex.h});
  const auto cls = lower_central_series(L).length();
  Json details = {{"p", p},
                  {"m", m},
                  {"centralizer_F_zero", cf == L.zero_submodule()},
                  {"centralizer_H_is_diagonal", ch == span_of_sum(L)},
                  {"nilpotency_class", cls ? Json(*cls) : Json(nullptr)}};
  if (!(cf == L.zero_submodule()) || !(ch == span_of_sum(L)) || cls != std::optional<std::size_t>(m)) {
    return violation_report("example2", "example_pm does not behave as stated", Json{{"p", p}, {"m", m}}, details);
  }
  return pass_report("example2", details);
}

// ---------------------------------------------------------------- groups

struct GroupSource {
  std::string file;
  std::string json;
  std::string builtin;
  std::size_t order = 0;
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> field;
};

void add_group_source(CLI::App* sub, GroupSource& s) {
  sub->add_option("--file", s.file, "group JSON file");
  sub->add_option("--json", s.json, "group JSON text");
  sub->add_option("--builtin", s.builtin, "cyclic, dihedral, quaternion, elementary_abelian, heisenberg");
  sub->add_option("--order", s.order, "order for cyclic and dihedral");
  sub->add_option("--p", s.p, "prime");
  sub->add_option("--k", s.k, "rank for elementary_abelian");
  sub->add_option("--field", s.field, "p,k: additive group of GF(p^k) with its Frobenius action")->delimiter(',');
}

GroupInput load_group(const GroupSource& s) {
  const int given = !s.file.empty() + !s.json.empty() + !s.builtin.empty() + !s.field.empty();
  if (given != 1) throw InputError("give exactly one of --file, --json, --builtin, --field");
  if (!s.file.empty()) return group_from_json(read_json_file(s.file));
  if (!s.json.empty()) {
    try {
      return group_from_json(Json::parse(s.json));
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("bad --json: ") + e.what());
    }
  }
  if (!s.field.empty()) {
    if (s.field.size() != 2) throw InputError("--field takes p,k");
    return group_from_json({{"field", {{"p", s.field[0]}, {"k", s.field[1]}}}});
  }
  Json j = {{"builtin", s.builtin}};
  if (s.order) j["order"] = s.order;
  if (s.p) j["p"] = s.p;
  if (s.k) j["k"] = s.k;
  return group_from_json(j);
}

std::int64_t group_prime(const FiniteGroup& G, std::int64_t given) {
  const auto p = p_group_prime(whole_group(G));
  if (!p) throw InputError("group of order " + std::to_string(G.order()) + " is not a p-group");
  if (given && *p != 1 && given != *p) throw InputError("group is a " + std::to_string(*p) + "-group");
  if (*p == 1) return given ? given : 2;
  return *p;
}

VerificationReport group_summary(const GroupInput& in) {
  const FiniteGroup& G = in.group;
  const Subgroup all = whole_group(G);
  Json details = {{"label", in.label},
                  {"order", G.order()},
                  {"abelian", is_abelian(G, all)},
                  {"exponent", exponent(G, all)},
                  {"center_order", center(G).size()},
                  {"derived_subgroup_order", commutator_subgroup(G, all, all).size()}};
  const auto c = nilpotency_class(G);
  details["nilpotency_class"] = c ? Json(*c) : Json(nullptr);
  if (G.order() <= kExhaustiveCap) details["rank"] = group_rank(G, all);
  if (in.action) {
    const auto v = validate_action(G, *in.action);
    details["action"] = v.to_json();
    details["centralizer_F_order"] = fixed_points(G, {in.action->f}).size();
    details["centralizer_H_order"] = fixed_points(G, {in.action->h}).size();
  }
  return pass_report("group", details);
}

VerificationReport free_module_report(const GroupInput& in) {
  const std::string check = "free_module";
  if (!in.action) throw InputError("free-module needs an action");
  const auto c = elementary_coordinates(in.group);
  const auto r = free_module_check(c.p, automorphism_matrix(c, in.action->h), in.action->params.q);
  Json factors = Json::array();
  for (const auto& f : r.invariant_factors) factors.push_back(f);
  Json details = {{"free", r.free},
                  {"dimension", r.dimension},
                  {"rank", r.rank},
                  {"fixed_dimension", r.fixed_dimension},
                  {"invariant_factors", factors},
                  {"dimension_equation", r.dimension_equation}};
  if (r.free && std::gcd(c.p, in.action->params.q) == 1 && !r.dimension_equation) {
    return violation_report(check, "free module without dim C_S(H) * q = dim S", r.fixed_dimension, details);
  }
  return pass_report(check, details);
}

const std::vector<std::string>& verify_checks() {
  static const std::vector<std::string> names{"validate", "order-formula", "coverage", "generation", "sylow",
                                              "nilpotency", "rank", "exponent", "free-module", "all"};
  return names;
}

Reports group_verify(const GroupInput& in, const std::string& which) {
  if (!in.action) throw InputError("verify needs an action (field group or \"action\" in the JSON)");
  const FiniteGroup& G = in.group;
  const FrobeniusAction& a = *in.action;
  using Fn = std::function<VerificationReport()>;
  const std::vector<std::pair<std::string, Fn>> table{
      {"validate",
       [&] {
         const auto v = validate_action(G, a);
         if (!v.structural()) return violation_report("validate", v.failure, v.to_json());
         return pass_report("validate", v.to_json());
       }},
      {"order-formula", [&] { return verify_order_formula(G, a); }},
      {"coverage", [&] { return verify_coverage(G, a); }},
      {"generation", [&] { return verify_generation(G, a); }},
      {"sylow", [&] { return verify_invariant_sylow(G, a); }},
      {"nilpotency", [&] { return verify_nilpotency_transfer(G, a); }},
      {"rank", [&] { return rank_report(G, a); }},
      {"exponent", [&] { return exponent_relation_report(G, a); }},
      {"free-module", [&] { return free_module_report(in); }},
  };
  Reports out;
  for (const auto& [name, fn] : table) {
    if (which != "all" && which != name) continue;
    if (which == "all" && name == "free-module") {
      const auto p = p_group_prime(whole_group(G));
      if (!p || !is_abelian(G, whole_group(G)) || exponent(G, whole_group(G)) > static_cast<std::size_t>(*p)) continue;
    }
    out.push_back(fn());
  }
  if (out.empty()) throw InputError("unknown check '" + which + "'");
  return out;
}

// ---------------------------------------------------------------- output

std::string summarize(const VerificationReport& r) {
  if (!r.reason.empty()) return r.reason;
  std::string s;
  for (const auto& [key, value] : r.details.items()) {
    if (!s.empty()) s += "  ";
    s += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return s;
}

}  // namespace

int exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == Status::InputError || r.status == Status::CapacityError) return 2;
    if (r.status == Status::Violation) code = 1;
  }
  return code;
}

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format, bool timing,
                   std::ostream& out) {
  if (format == "json") {
    for (const auto& r : reports) out << r.to_json(timing).dump() << '\n';
    return;
  }
  std::size_t wc = 5, ws = 6;
  for (const auto& r : reports) {
    wc = std::max(wc, r.check.size());
    ws = std::max(ws, to_string(r.status).size());
  }
  out << std::left << std::setw(static_cast<int>(wc)) << "check" << "  " << std::setw(static_cast<int>(ws))
      << "status" << "  summary\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(wc)) << r.check << "  " << std::setw(static_cast<int>(ws))
        << to_string(r.status) << "  " << summarize(r);
    if (timing) out << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    out << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points of Frobenius groups of automorphisms: exact checks", "flab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--timing", timing, "add wall-clock seconds to each report");

  Reports reports;
  std::function<Reports()> action;
  std::string command_name;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Reports()> fn) {
    sub->callback([&action, &command_name, name, fn] {
      command_name = name;
      action = fn;
    });
  };

  std::int64_t n = 0, q = 0, r = 0, c = 1, m = 1, w = 0, limit = 10000;
  std::vector<std::int64_t> seq;

  auto* prim = app.add_subcommand("prim", "condition (prim) for (n, q, r)");
  add_params(prim, n, q, r);
  bind(prim, "prim", [&] {
    const auto bad = prim_violation(n, q, r);
    Json details = {{"n", n}, {"q", q}, {"r", r}, {"prim", !bad}};
    if (bad) {
      return Reports{violation_report("prim", "order of r mod d is not q",
                                      {{"divisor", *bad}, {"order", multiplicative_order(r, *bad)}}, details)};
    }
    return Reports{pass_report("prim", details)};
  });

  auto* rdep = app.add_subcommand("rdep", "r-dependence of a sequence");
  add_params(rdep, n, q, r);
  rdep->add_option("--seq", seq, "nonzero residues")->required()->delimiter(',');
  bind(rdep, "rdep", [&] {
    const auto res = find_dependence(seq, params_of(n, q, r));
    Json details = {{"seq", seq}, {"dependent", res.dependent}};
    if (res.dependent) details["exponents"] = res.exponents;
    return Reports{pass_report("rdep", details)};
  });

  auto* dset = app.add_subcommand("dset", "D-set of an r-independent sequence");
  add_params(dset, n, q, r);
  dset->add_option("--seq", seq, "nonzero residues")->required()->delimiter(',');
  bind(dset, "dset", [&] {
    const auto D = d_set(seq, params_of(n, q, r));
    const BigInt bound = big_pow(q, seq.size() + 1);
    Json details = {{"d_set", std::vector<std::int64_t>(D.begin(), D.end())}, {"bound", integer_to_json(bound)}};
    if (BigInt(D.size()) > bound) return Reports{violation_report("dset", "|D| exceeds q^(k+1)", D.size(), details)};
    return Reports{pass_report("dset", details)};
  });

  auto* nbound = app.add_subcommand("nbound", "N(c, q) and the Engel width c + q^(c+1)");
  nbound->add_option("--c", c)->required();
  nbound->add_option("--q", q)->required();
  bind(nbound, "nbound", [&] {
    return Reports{pass_report("nbound", {{"c", c},
                                          {"q", q},
                                          {"capacity_N", integer_to_json(capacity_N(c, q))},
                                          {"engel_width_w", integer_to_json(engel_width_w(c, q))}})};
  });

  std::string g1, g2;
  auto* charp = app.add_subcommand("charp", "common-root moduli against the characteristic bound");
  charp->add_option("--g1", g1, "polynomial in x")->required();
  charp->add_option("--g2", g2, "polynomial in x")->required();
  charp->add_option("--limit", limit, "largest modulus to search");
  bind(charp, "charp", [&] {
    const IntPoly a = IntPoly::parse(g1), b = IntPoly::parse(g2);
    const BigInt bound = charp_bound(a, b);
    const auto moduli = common_root_moduli(a, b, limit);
    const bool common = strip_x_power(gcd_over_q(a, b)).first.degree() > 0;
    Json details = {{"g1", a.to_string()},
                    {"g2", b.to_string()},
                    {"bound", integer_to_json(bound)},
                    {"moduli", moduli},
                    {"common_nonzero_root", common}};
    if (!common) {
      for (auto n0 : moduli) {
        if (BigInt(n0) > bound) return Reports{violation_report("charp", "modulus above the bound", n0, details)};
      }
    }
    return Reports{pass_report("charp", details)};
  });

  // lie
  auto* lie = app.add_subcommand("lie", "graded Lie rings");
  lie->require_subcommand(1);
  LieSource ls;
  auto* lv = lie->add_subcommand("validate", "antisymmetry, Jacobi, grading, automorphisms");
  add_lie_source(lv, ls);
  bind(lv, "lie validate", [&] { return Reports{lie_validate(load_lie(ls))}; });
  auto* lsr = lie->add_subcommand("series", "lower central and derived series");
  add_lie_source(lsr, ls);
  bind(lsr, "lie series", [&] { return Reports{lie_series(load_lie(ls))}; });
  auto* lsel = lie->add_subcommand("select", "selective c-nilpotency of a Z/n-graded ring");
  add_lie_source(lsel, ls);
  add_params(lsel, n, q, r);
  lsel->add_option("--c", c)->required();
  bind(lsel, "lie select", [&] {
    const auto in = load_lie(ls);
    const auto res = check_selective_nilpotency(in.ring, c, params_of(n, q, r));
    Json details = {{"c", c}, {"holds", res.holds}};
    if (!res.holds) {
      return Reports{violation_report("lie_select", "nonzero bracket over an r-independent tuple",
                                      {{"grades", res.grade_tuple}, {"basis", res.basis_choice}}, details)};
    }
    return Reports{pass_report("lie_select", details)};
  });
  std::string aut_name = "h", omega;
  auto* leig = lie->add_subcommand("eigen", "eigenspace decomposition of an automorphism of order n");
  add_lie_source(leig, ls);
  leig->add_option("--aut", aut_name, "automorphism name in the input");
  leig->add_option("--n", n, "order")->required();
  leig->add_option("--omega", omega, "root of unity of order n (default: w for Z[wn])");
  bind(leig, "lie eigen", [&] {
    const auto in = load_lie(ls);
    const auto it = in.automorphisms.find(aut_name);
    if (it == in.automorphisms.end()) throw InputError("no automorphism named '" + aut_name + "'");
    const auto& R = in.ring.ring();
    RingElement w;
    if (!omega.empty()) w = ring_element_from_json(R, Json(omega));
    else if (R.kind() == RingKind::Cyclotomic) w = R.root();
    else throw InputError("--omega is required outside Z[wn]");
    const auto dec = eigenspace_decomposition(in.ring, it->second, n, w);
    Json sizes = Json::array();
    for (const auto& s : dec.components) sizes.push_back(submodule_size(s));
    Json details = {{"component_sizes", sizes},
                    {"spans", dec.spans},
                    {"direct", dec.direct},
                    {"n_multiple_in_sum", dec.n_multiple_in_sum},
                    {"dependencies_annihilated", dec.dependencies_annihilated}};
    if (!dec.n_multiple_in_sum || !dec.dependencies_annihilated) {
      return Reports{violation_report("lie_eigen", "n L is not covered by the eigenspaces", nullptr, details)};
    }
    return Reports{pass_report("lie_eigen", details)};
  });
  auto* lex = lie->add_subcommand("examples", "the three explicit example algebras");
  bind(lex, "lie examples", [&] {
    Reports out{example1_report(CoefficientRing::prime_field(5)), example1_report(CoefficientRing::rationals())};
    for (std::int64_t p : {5, 7}) {
      for (std::int64_t mm = 1; mm <= 4; ++mm) out.push_back(example2_report(p, mm));
    }
    return out;
  });

  // free
  auto* fr = app.add_subcommand("free", "free Lie ring over indexed generators");
  fr->require_subcommand(1);
  std::vector<std::string> gens, head, tail;
  std::string expr;
  std::size_t weight = 3;
  auto* fb = fr->add_subcommand("basis", "Hall basis up to a weight");
  fb->add_option("--gens", gens, "generators name@index")->required()->delimiter(',');
  fb->add_option("--weight", weight, "largest weight");
  bind(fb, "free basis", [&] {
    const auto g = parse_generators(gens);
    const auto basis = hall_basis(g, weight);
    std::vector<std::string> words;
    for (const auto& b : basis) words.push_back(b.to_string());
    std::set<IndexedGenerator> distinct(g.begin(), g.end());
    Json witt = Json::array();
    for (std::size_t wt = 1; wt <= weight; ++wt) witt.push_back(integer_to_json(witt_dimension(distinct.size(), wt)));
    return Reports{pass_report("free_basis", {{"count", words.size()}, {"words", strings(words)}, {"witt", witt}})};
  });
  auto* fn = fr->add_subcommand("normalize", "Hall normal form of a bracket");
  fn->add_option("--expr", expr, "e.g. [x@1,[y@2,x@1]]")->required();
  bind(fn, "free normalize", [&] {
    const Bracket b = parse_bracket(expr);
    return Reports{pass_report("free_normalize", {{"input", b.to_string()}, {"normal_form", normalize(b).to_string()}})};
  });
  std::size_t dk = 1;
  auto* fd = fr->add_subcommand("delta", "delta_k commutator");
  fd->add_option("--k", dk)->required();
  fd->add_option("--args", gens, "2^k generators")->required()->delimiter(',');
  bind(fd, "free delta", [&] {
    std::vector<Bracket> a;
    for (const auto& g : parse_generators(gens)) a.push_back(Bracket::letter(g));
    const Bracket d = delta(dk, a);
    return Reports{pass_report("free_delta", {{"delta", d.to_string()}, {"normal_form", normalize(d).to_string()}})};
  });
  auto rewrite_report = [](const std::string& check, const RewriteResult& res) {
    Json kept = Json::array(), dropped = Json::array();
    for (const auto& t : res.kept) kept.push_back({{"term", t.term.to_string()}, {"leading", t.leading}});
    for (const auto& t : res.dropped) dropped.push_back({{"term", t.term.to_string()}, {"reason", to_string(t.reason)}});
    Json details = {{"d_set", res.d_set},
                    {"input", res.input.to_string()},
                    {"kept", kept},
                    {"dropped", dropped},
                    {"identity_holds", res.identity_holds}};
    if (!res.identity_holds) return violation_report(check, "input != kept + dropped", nullptr, details);
    return pass_report(check, details);
  };
  auto* fo = fr->add_subcommand("odin", "first rewriting: tail indices into the D-set");
  fo->add_option("--head", head, "u generators")->required()->delimiter(',');
  fo->add_option("--tail", tail, "x generators")->required()->delimiter(',');
  add_params(fo, n, q, r);
  bind(fo, "free odin", [&] {
    return Reports{rewrite_report("free_odin", odin_rewrite(parse_generators(head), parse_generators(tail),
                                                            params_of(n, q, r)))};
  });
  auto* fv = fr->add_subcommand("dva", "second rewriting: large-order entries first");
  fv->add_option("--head", head, "u generators")->required()->delimiter(',');
  fv->add_option("--tail", tail, "x generators")->required()->delimiter(',');
  fv->add_option("--w", w, "Engel width")->required();
  add_params(fv, n, q, r);
  bind(fv, "free dva", [&] {
    return Reports{rewrite_report("free_dva", dva_rewrite(parse_generators(head), parse_generators(tail),
                                                          params_of(n, q, r), w))};
  });
  std::size_t max_weight = 0;
  auto* fz = fr->add_subcommand("razresh", "membership of delta_f in the ideal of qualifying commutators");
  fz->add_option("--c", c)->required();
  fz->add_option("--indices", seq, "2^f indices")->required()->delimiter(',');
  fz->add_option("--max-weight", max_weight, "defaults to the weight cap");
  add_params(fz, n, q, r);
  bind(fz, "free razresh", [&] {
    const auto res = razresh_membership(c, params_of(n, q, r), seq, max_weight ? max_weight : weight_cap());
    return Reports{pass_report("free_razresh", {{"member", res.member},
                                                {"generators", res.generators},
                                                {"component_dimension", integer_to_json(res.component_dimension)},
                                                {"ideal_dimension", res.ideal_dimension},
                                                {"delta", res.delta}})};
  });

  // group
  auto* gr = app.add_subcommand("group", "finite groups with Frobenius actions");
  gr->require_subcommand(1);
  GroupSource gs;
  auto* gb = gr->add_subcommand("build", "build a group and summarize it");
  add_group_source(gb, gs);
  bind(gb, "group build", [&] { return Reports{group_summary(load_group(gs))}; });
  std::string which;
  auto* gv = gr->add_subcommand("verify", "fixed-point theorem checks");
  gv->add_option("check", which, "check name")->required()->check(CLI::IsMember(verify_checks()));
  add_group_source(gv, gs);
  bind(gv, "group verify", [&] { return group_verify(load_group(gs), which); });
  auto* gj = gr->add_subcommand("jz", "Jennings-Zassenhaus filtration");
  add_group_source(gj, gs);
  bind(gj, "group jz", [&] {
    const auto in = load_group(gs);
    const auto p = group_prime(in.group, gs.p);
    const auto D = jz_filtration(in.group, p);
    auto rep = check_filtration_laws(in.group, D);
    rep.check = "jz";
    rep.details["p"] = p;
    rep.details["dimensions"] = D.dimensions();
    return Reports{rep};
  });
  auto* gl = gr->add_subcommand("lazard", "Lazard Lie algebra and the (ad x)^p check");
  add_group_source(gl, gs);
  bind(gl, "group lazard", [&] {
    const auto in = load_group(gs);
    const auto p = group_prime(in.group, gs.p);
    const auto dl = lazard_algebra(in.group, p);
    auto rep = lazard_lemma_check(in.group, p);
    rep.details["p"] = p;
    rep.details["lp_dimension"] = dl.lp.rank();
    rep.details["lp_class"] = dl.lp_class ? Json(*dl.lp_class) : Json(nullptr);
    return Reports{rep};
  });
  auto* gp = gr->add_subcommand("powerful", "G^p >= [G,G] (G^4 for p = 2)");
  add_group_source(gp, gs);
  bind(gp, "group powerful", [&] {
    const auto in = load_group(gs);
    const auto p = group_prime(in.group, gs.p);
    return Reports{pass_report("powerful", {{"p", p}, {"powerful", is_powerful(in.group, p)}})};
  });
  std::int64_t bp = 5;
  auto* gbch = gr->add_subcommand("bch", "group of example_pm(p, m) by the truncated Hausdorff formula");
  gbch->add_option("--p", bp)->required();
  gbch->add_option("--m", m)->required();
  bind(gbch, "group bch", [&] {
    const auto res = lazard_example(bp, m);
    if (!res.ok()) return Reports{violation_report("bch", "transported action does not behave as stated", nullptr,
                                                   res.to_json())};
    return Reports{pass_report("bch", res.to_json())};
  });

  // suite
  auto* suite = app.add_subcommand("suite", "bundled regression suites");
  suite->require_subcommand(1);
  std::string dir = default_fixture_dir();
  std::size_t threads = 0;
  bool update = false;
  auto* sp = suite->add_subcommand("paper", "run every fixture and compare with its golden reports");
  sp->add_option("--dir", dir, "fixture directory");
  sp->add_option("--threads", threads, "worker threads (default: hardware)");
  sp->add_flag("--update", update, "rewrite the goldens from the current output");
  bind(sp, "suite paper", [&] { return run_suite(load_suite(dir), threads, update); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  const std::string check = [&] {
    std::string s = command_name;
    std::replace(s.begin(), s.end(), ' ', '_');
    return s;
  }();
  try {
    reports = action();
  } catch (const InputError& e) {
    reports = {error_report(check, Status::InputError, e.what())};
  } catch (const PreconditionError& e) {
    reports = {error_report(check, Status::InputError, std::string("precondition: ") + e.what())};
  } catch (const CapacityError& e) {
    reports = {error_report(check, Status::CapacityError, e.what())};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& rep : reports) {
    if (rep.seconds == 0) rep.seconds = seconds / static_cast<double>(reports.size());
  }
  print_reports(reports, format, timing, out);
  return exit_code(reports);
}

}  // namespace flab::cli
