#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flab/bigint.hpp"

namespace flab {

struct IndexedGenerator {
  std::string name;
  std::int64_t index = 0;

  friend auto operator<=>(const IndexedGenerator&, const IndexedGenerator&) = default;
  friend bool operator==(const IndexedGenerator&, const IndexedGenerator&) = default;
};

std::string to_string(const IndexedGenerator& g);

// Binary bracketing over indexed generators. Trees are immutable and share
// structure. A HallWord is a Bracket for which is_hall() holds.
class Bracket {
 public:
  static Bracket letter(IndexedGenerator g);
  static Bracket pair(const Bracket& left, const Bracket& right);
  // [x_1, x_2, ..., x_k] = [[...[x_1, x_2], ...], x_k].
  static Bracket left_normed(const std::vector<Bracket>& items);

  bool is_letter() const { return node_->leaf; }
  const IndexedGenerator& generator() const { return node_->gen; }
  const Bracket& left() const { return *node_->left; }
  const Bracket& right() const { return *node_->right; }
  std::size_t weight() const { return node_->weight; }
  // Plain integer sum of leaf indices; reduce modulo n where needed.
  std::int64_t index_sum() const { return node_->index_sum; }
  std::vector<IndexedGenerator> leaves() const;

  // Hall order: heavier words are smaller; letters compare by (name,
  // index); equal-weight trees compare by (left, right).
  friend std::strong_ordering operator<=>(const Bracket& a, const Bracket& b);
  friend bool operator==(const Bracket& a, const Bracket& b) { return (a <=> b) == 0; }

  // [u, v] with u < v and (u a letter or u.right >= v), recursively.
  bool is_hall() const;

  std::string to_string() const;

 private:
  struct Node {
    bool leaf = true;
    IndexedGenerator gen;
    std::shared_ptr<const Bracket> left, right;
    std::size_t weight = 1;
    std::int64_t index_sum = 0;
  };
  explicit Bracket(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using HallWord = Bracket;

// Integer combination of Hall words; zero coefficients are never stored.
class FreeLieElement {
 public:
  FreeLieElement() = default;
  // w must be a Hall word.
  static FreeLieElement word(const HallWord& w, const BigInt& coeff = 1);

  const std::map<HallWord, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const HallWord& w, const BigInt& coeff);

  FreeLieElement operator-() const;
  FreeLieElement& operator+=(const FreeLieElement& other);
  FreeLieElement& operator-=(const FreeLieElement& other);
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
  friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) { return a -= b; }
  friend FreeLieElement operator*(const BigInt& s, const FreeLieElement& a);
  friend bool operator==(const FreeLieElement& a, const FreeLieElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<HallWord, BigInt> terms_;
};

// Rewrites brackets of Hall words into Hall normal form. Keeps a cache of
// word pairs, so reuse one instance for many related computations; an
// instance is not meant to be shared between threads.
class HallRewriter {
 public:
  FreeLieElement bracket(const HallWord& u, const HallWord& v);
  FreeLieElement bracket(const FreeLieElement& a, const FreeLieElement& b);
  FreeLieElement normalize(const Bracket& expr);

 private:
  std::map<std::pair<HallWord, HallWord>, FreeLieElement> cache_;
};

FreeLieElement normalize(const Bracket& expr);
FreeLieElement bracket(const FreeLieElement& a, const FreeLieElement& b);

// Grammar: gen := name '@' integer; expr := gen | '[' expr (',' expr)+ ']'
// with more than two entries read left-normed.
Bracket parse_bracket(std::string_view text);

// Weight cap for basis enumeration and membership checks: FLAB_WEIGHT_CAP
// when set, 8 otherwise.
std::size_t weight_cap();

// All Hall words of weight <= max_weight, ordered by weight and then by
// the Hall order. Duplicate generators are merged. max_weight above
// weight_cap() raises CapacityError.
std::vector<HallWord> hall_basis(std::vector<IndexedGenerator> generators, std::size_t max_weight);

// Witt's formula: dimension of the weight-n part of the free Lie ring on
// k generators, (1/n) sum_{d | n} mu(d) k^(n/d).
BigInt witt_dimension(std::size_t k, std::size_t n);

}  // namespace flab
