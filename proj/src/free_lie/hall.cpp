#include "flab/free_lie/hall.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "flab/errors.hpp"

namespace flab {

std::string to_string(const IndexedGenerator& g) { return g.name + "@" + std::to_string(g.index); }

Bracket Bracket::letter(IndexedGenerator g) {
  auto node = std::make_shared<Node>();
  node->index_sum = g.index;
  node->gen = std::move(g);
  return Bracket(std::move(node));
}

Bracket Bracket::pair(const Bracket& left, const Bracket& right) {
  auto node = std::make_shared<Node>();
  node->leaf = false;
  node->left = std::make_shared<const Bracket>(left);
  node->right = std::make_shared<const Bracket>(right);
  node->weight = left.weight() + right.weight();
  node->index_sum = left.index_sum() + right.index_sum();
  return Bracket(std::move(node));
}

Bracket Bracket::left_normed(const std::vector<Bracket>& items) {
  if (items.empty()) throw InputError("empty commutator");
  Bracket acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = pair(acc, items[i]);
  return acc;
}

std::vector<IndexedGenerator> Bracket::leaves() const {
  std::vector<IndexedGenerator> out;
  std::vector<const Bracket*> stack{this};
  while (!stack.empty()) {
    const Bracket* b = stack.back();
    stack.pop_back();
    if (b->is_letter()) {
      out.push_back(b->generator());
    } else {
      stack.push_back(&b->right());
      stack.push_back(&b->left());
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Bracket& a, const Bracket& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.weight() != b.weight()) return b.weight() <=> a.weight();
  if (a.is_letter()) return a.generator() <=> b.generator();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool Bracket::is_hall() const {
  if (is_letter()) return true;
  const Bracket& u = left();
  const Bracket& v = right();
  if (!u.is_hall() || !v.is_hall()) return false;
  if (!(u < v)) return false;
  return u.is_letter() || u.right() >= v;
}

std::string Bracket::to_string() const {
  if (is_letter()) return flab::to_string(generator());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

FreeLieElement FreeLieElement::word(const HallWord& w, const BigInt& coeff) {
  FreeLieElement e;
  e.add_term(w, coeff);
  return e;
}

void FreeLieElement::add_term(const HallWord& w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeLieElement FreeLieElement::operator-() const {
  FreeLieElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreeLieElement operator*(const BigInt& s, const FreeLieElement& a) {
  FreeLieElement out;
  if (s == 0) return out;
  out = a;
  for (auto& [w, c] : out.terms_) c *= s;
  return out;
}

std::string FreeLieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += flab::to_string(mag) + "*";
    out += w.to_string();
    first = false;
  }
  return out;
}

FreeLieElement HallRewriter::bracket(const HallWord& u, const HallWord& v) {
  if (u == v) return {};
  if (v < u) return -bracket(v, u);
  if (u.is_letter() || u.right() >= v) return FreeLieElement::word(Bracket::pair(u, v));
  auto key = std::make_pair(u, v);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  // u = [x, y] with y < v: [[x,y],v] = [[x,v],y] + [x,[y,v]].
  const HallWord& x = u.left();
  const HallWord& y = u.right();
  FreeLieElement out = bracket(bracket(x, v), FreeLieElement::word(y));
  out += bracket(FreeLieElement::word(x), bracket(y, v));
  cache_.emplace(std::move(key), out);
  return out;
}

FreeLieElement HallRewriter::bracket(const FreeLieElement& a, const FreeLieElement& b) {
  FreeLieElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      out += BigInt(ca * cb) * bracket(wa, wb);
    }
  }
  return out;
}

FreeLieElement HallRewriter::normalize(const Bracket& expr) {
  if (expr.is_letter()) return FreeLieElement::word(expr);
  return bracket(normalize(expr.left()), normalize(expr.right()));
}

FreeLieElement normalize(const Bracket& expr) {
  HallRewriter rw;
  return rw.normalize(expr);
}

FreeLieElement bracket(const FreeLieElement& a, const FreeLieElement& b) {
  HallRewriter rw;
  return rw.bracket(a, b);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Bracket parse() {
    Bracket b = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse bracket '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Bracket expr() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '[') {
      ++pos_;
      std::vector<Bracket> items{expr()};
      skip();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        items.push_back(expr());
        skip();
      }
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      if (items.size() < 2) fail("a bracket needs at least two entries");
      return Bracket::left_normed(items);
    }
    return generator();
  }

  Bracket generator() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a generator name");
    std::string name(s_.substr(start, pos_ - start));
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '@') fail("expected '@' after generator name");
    ++pos_;
    skip();
    std::size_t num = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(num, pos_ - num));
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    std::int64_t index = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) fail("bad generator index");
    return Bracket::letter({std::move(name), index});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Bracket parse_bracket(std::string_view text) { return Parser(text).parse(); }

std::size_t weight_cap() {
  const char* env = std::getenv("FLAB_WEIGHT_CAP");
  if (env == nullptr || *env == '\0') return 8;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw InputError("FLAB_WEIGHT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<HallWord> hall_basis(std::vector<IndexedGenerator> generators, std::size_t max_weight) {
  if (max_weight < 1) throw InputError("max_weight must be at least 1");
  if (max_weight > weight_cap()) {
    throw CapacityError("max_weight " + std::to_string(max_weight) + " exceeds the weight cap " +
                        std::to_string(weight_cap()));
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<std::vector<HallWord>> by_weight(max_weight + 1);
  if (max_weight >= 1) {
    for (auto& g : generators) by_weight[1].push_back(Bracket::letter(g));
  }
  for (std::size_t n = 2; n <= max_weight; ++n) {
    for (std::size_t a = 1; a < n; ++a) {
      for (const HallWord& u : by_weight[a]) {
        for (const HallWord& v : by_weight[n - a]) {
          if (!(u < v)) continue;
          if (!u.is_letter() && u.right() < v) continue;
          by_weight[n].push_back(Bracket::pair(u, v));
        }
      }
    }
    std::sort(by_weight[n].begin(), by_weight[n].end());
  }
  std::vector<HallWord> out;
  for (std::size_t n = 1; n <= max_weight; ++n) {
    for (auto& w : by_weight[n]) out.push_back(std::move(w));
  }
  return out;
}

BigInt witt_dimension(std::size_t k, std::size_t n) {
  if (n == 0) return 0;
  auto mobius = [](std::size_t d) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  BigInt sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    sum += mobius(d) * big_pow(static_cast<std::int64_t>(k), n / d);
  }
  return sum / n;
}

}  // namespace flab
