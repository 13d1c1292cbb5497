#include "flab/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "flab/errors.hpp"

namespace flab::cli {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + s + "'");
  }
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw InputError("zero denominator in '" + s + "'");
      return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
      throw InputError("bad number '" + s + "'");
    }
  }
  throw InputError("expected an integer or an \"a/b\" string, got " + j.dump());
}

std::vector<Elem> perm_from_json(const Json& j, std::size_t order, const char* what) {
  if (!j.is_array() || j.size() != order) {
    throw InputError(std::string(what) + " must list the image of each of the " + std::to_string(order) + " elements");
  }
  std::vector<Elem> p;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= order) {
      throw InputError(std::string(what) + " has an entry outside 0.." + std::to_string(order - 1));
    }
    p.push_back(v.get<Elem>());
  }
  return p;
}

}  // namespace

CoefficientRing ring_from_string(const std::string& text) {
  if (text == "Z") return CoefficientRing::integers();
  if (text == "Q") return CoefficientRing::rationals();
  if (text.rfind("Z/", 0) == 0) return CoefficientRing::integers_mod(parse_int(text.substr(2), "modulus"));
  if (text.rfind("F", 0) == 0) return CoefficientRing::prime_field(parse_int(text.substr(1), "prime"));
  if (text.rfind("Z[w", 0) == 0 && text.back() == ']') {
    const auto n = parse_int(text.substr(3, text.size() - 4), "root order");
    if (n < 1) throw InputError("root order must be positive");
    return CoefficientRing::cyclotomic(static_cast<unsigned>(n));
  }
  throw InputError("unknown ring '" + text + "' (use Z, Q, Z/m, Fp or Z[wn])");
}

std::string ring_to_string(const CoefficientRing& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + ring.modulus().str();
    case RingKind::PrimeField: return "F" + ring.modulus().str();
    case RingKind::Cyclotomic: return "Z[w" + ring.modulus().str() + "]";
  }
  return "?";
}

Json integer_to_json(const BigInt& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

RingElement ring_element_from_json(const CoefficientRing& ring, const Json& j) {
  if (j.is_array()) {
    if (j.size() > ring.degree()) throw InputError("ring element has too many coordinates");
    RingElement a = ring.zero();
    for (std::size_t i = 0; i < j.size(); ++i) a[i] = rational_from_json(j[i]);
    return ring.reduce(a);
  }
  return ring.from_rational(rational_from_json(j));
}

Json ring_element_to_json(const CoefficientRing& ring, const RingElement& a) {
  auto one = [](const Rational& x) {
    return is_integral(x) ? integer_to_json(to_integer(x)) : Json(to_string(x));
  };
  if (ring.degree() == 1) return one(a[0]);
  Json arr = Json::array();
  for (const auto& x : a) arr.push_back(one(x));
  return arr;
}

LieInput lie_from_json(const Json& j) {
  const CoefficientRing ring = ring_from_string(get_field<std::string>(j, "ring"));
  const auto rank = get_field<std::size_t>(j, "rank");
  if (rank == 0 || rank > 64) throw InputError("rank must be between 1 and 64");
  auto element = [&](const Json& v) {
    if (!v.is_array() || v.size() != rank) throw InputError("Lie ring elements need " + std::to_string(rank) + " entries");
    LieElement x;
    for (const auto& c : v) x.push_back(ring_element_from_json(ring, c));
    return x;
  };
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned()) {
        throw InputError("bracket entries look like [i, j, [..]]");
      }
      const auto i = b[0].get<std::size_t>(), k = b[1].get<std::size_t>();
      if (i >= rank || k >= rank) throw InputError("bracket index out of range");
      entries.push_back({i, k, element(b[2])});
    }
  }
  std::optional<Grading> grading;
  if (j.contains("grading")) {
    const auto& g = j.at("grading");
    Grading gr{get_field<std::vector<std::int64_t>>(g, "degrees"), get_field<std::int64_t>(g, "modulus")};
    if (gr.degrees.size() != rank) throw InputError("grading needs one degree per basis vector");
    grading = gr;
  }
  LieInput out{GradedLieRing::from_brackets(ring, rank, entries, grading), {}};
  if (j.contains("automorphisms")) {
    for (const auto& [name, rows] : j.at("automorphisms").items()) {
      if (!rows.is_array() || rows.size() != rank) throw InputError("automorphism '" + name + "' needs one row per basis vector");
      std::vector<LieElement> r;
      for (const auto& row : rows) r.push_back(element(row));
      out.automorphisms.emplace(name, automorphism_from_rows(out.ring, r));
    }
  }
  return out;
}

Json lie_to_json(const GradedLieRing& L, const std::map<std::string, LieAutomorphism>& automorphisms) {
  const auto& R = L.ring();
  auto element = [&](const LieElement& x) {
    Json v = Json::array();
    for (const auto& c : x) v.push_back(ring_element_to_json(R, c));
    return v;
  };
  Json j = {{"ring", ring_to_string(R)}, {"rank", L.rank()}};
  Json br = Json::array();
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t k = i + 1; k < L.rank(); ++k) {
      const auto& v = L.constant(i, k);
      bool zero = true;
      for (const auto& c : v) zero = zero && R.is_zero(c);
      if (!zero) br.push_back(Json::array({i, k, element(v)}));
    }
  }
  j["brackets"] = br;
  if (L.grading()) j["grading"] = {{"degrees", L.grading()->degrees}, {"modulus", L.grading()->modulus}};
  if (!automorphisms.empty()) {
    Json a = Json::object();
    for (const auto& [name, phi] : automorphisms) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < L.rank(); ++i) {
        rows.push_back(element(L.from_base(apply(L, phi, L.to_base(L.basis_element(i))))));
      }
      a[name] = rows;
    }
    j["automorphisms"] = a;
  }
  return j;
}

FrobeniusAction action_from_json(const Json& j, std::size_t order) {
  FrobeniusAction a;
  a.f.perm = perm_from_json(j.contains("f") ? j.at("f") : Json(), order, "f");
  a.h.perm = perm_from_json(j.contains("h") ? j.at("h") : Json(), order, "h");
  a.params = {get_field<std::int64_t>(j, "n"), get_field<std::int64_t>(j, "q"), get_field<std::int64_t>(j, "r")};
  a.params.check_well_formed();
  return a;
}

Json action_to_json(const FrobeniusAction& a) {
  return {{"f", a.f.perm}, {"h", a.h.perm}, {"n", a.params.n}, {"q", a.params.q}, {"r", a.params.r}};
}

GroupInput group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group must be a JSON object");
  auto attach = [&](GroupInput g) {
    if (j.contains("action")) g.action = action_from_json(j.at("action"), g.group.order());
    return g;
  };
  if (j.contains("field")) {
    const auto& f = j.at("field");
    FieldAction fa = build_field_action(get_field<std::int64_t>(f, "p"), get_field<std::int64_t>(f, "k"));
    GroupInput g{std::move(fa.group), std::move(fa.action), "GF(" + std::to_string(f.at("p").get<std::int64_t>()) +
                                                              "^" + std::to_string(f.at("k").get<std::int64_t>()) + ")"};
    return g;
  }
  if (j.contains("table")) {
    std::vector<std::vector<Elem>> t;
    try {
      t = j.at("table").get<std::vector<std::vector<Elem>>>();
    } catch (const Json::exception&) {
      throw InputError("table must be a square array of element ids");
    }
    return attach({FiniteGroup::from_table(std::move(t)), std::nullopt, "table"});
  }
  if (j.contains("permutations")) {
    const auto& p = j.at("permutations");
    const auto degree = get_field<std::size_t>(p, "degree");
    const auto gens = get_field<std::vector<std::vector<std::size_t>>>(p, "generators");
    return attach({FiniteGroup::from_permutations(degree, gens), std::nullopt, "permutations"});
  }
  if (j.contains("builtin")) {
    const auto name = get_field<std::string>(j, "builtin");
    if (name == "cyclic") {
      const auto n = get_field<std::size_t>(j, "order");
      return attach({cyclic_group(n), std::nullopt, "C" + std::to_string(n)});
    }
    if (name == "dihedral") {
      const auto n = get_field<std::size_t>(j, "order");
      return attach({dihedral_group(n), std::nullopt, "D" + std::to_string(n)});
    }
    if (name == "quaternion") return attach({quaternion_group(), std::nullopt, "Q8"});
    if (name == "elementary_abelian") {
      const auto p = get_field<std::int64_t>(j, "p");
      const auto k = get_field<std::size_t>(j, "k");
      return attach({elementary_abelian_group(p, k), std::nullopt, "E" + std::to_string(p) + "^" + std::to_string(k)});
    }
    if (name == "heisenberg") {
      const auto p = get_field<std::int64_t>(j, "p");
      return attach({heisenberg_group(p), std::nullopt, "Heis" + std::to_string(p)});
    }
    throw InputError("unknown builtin group '" + name + "'");
  }
  throw InputError("group needs one of table, permutations, builtin or field");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace flab::cli
