#include "flab/free_lie/rewriting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "flab/errors.hpp"

namespace flab {

Bracket delta(std::size_t k, const std::vector<Bracket>& args) {
  if (k >= 63 || args.size() != (std::size_t{1} << k)) {
    throw InputError("delta_" + std::to_string(k) + " takes 2^" + std::to_string(k) + " arguments");
  }
  if (k == 0) return args.front();
  const std::size_t half = args.size() / 2;
  std::vector<Bracket> lo(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Bracket> hi(args.begin() + static_cast<std::ptrdiff_t>(half), args.end());
  return Bracket::pair(delta(k - 1, lo), delta(k - 1, hi));
}

Bracket FormalCommutator::expr() const {
  std::vector<Bracket> items = head;
  items.insert(items.end(), tail.begin(), tail.end());
  return Bracket::left_normed(items);
}

std::string FormalCommutator::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto* part : {&head, &tail}) {
    for (const Bracket& b : *part) {
      if (!first) out += ",";
      out += b.to_string();
      first = false;
    }
  }
  return out + "]";
}

std::string to_string(DropReason reason) {
  switch (reason) {
    case DropReason::ZeroIndexSum: return "zero-index-sum";
    case DropReason::IndependentBracket: return "independent-bracket";
    case DropReason::EngelAnnihilated: return "engel-annihilated";
  }
  return "unknown";
}

namespace {

class Rewriter {
 public:
  Rewriter(const std::vector<IndexedGenerator>& head, const FrobeniusParams& params) : params_(params) {
    params.check_well_formed();
    if (head.empty()) throw InputError("the head commutator needs at least one generator");
    std::vector<std::int64_t> idx;
    for (const auto& g : head) {
      head_.push_back(Bracket::letter(g));
      idx.push_back(residue(g.index));
    }
    d_ = d_set(idx, params);
  }

  std::int64_t residue(std::int64_t x) const { return mod_floor(x, params_.n); }
  bool in_d(const Bracket& b) const { return d_.count(residue(b.index_sum())) > 0; }
  const std::set<std::int64_t>& d() const { return d_; }
  const std::vector<Bracket>& head() const { return head_; }

  // First rewriting; `done` receives terms whose tail lies in D.
  void odin(std::vector<Bracket> tail, RewriteResult& out, const std::function<void(std::vector<Bracket>)>& done) {
    for (const Bracket& m : tail) {
      if (residue(m.index_sum()) == 0) {
        out.dropped.push_back({{head_, std::move(tail)}, DropReason::ZeroIndexSum});
        return;
      }
    }
    std::size_t k = 0;
    while (k < tail.size() && in_d(tail[k])) ++k;
    if (k == tail.size()) {
      done(std::move(tail));
      return;
    }
    if (k == 0) {
      out.dropped.push_back({{head_, std::move(tail)}, DropReason::IndependentBracket});
      return;
    }
    // [W, a, b, ...] = [W, b, a, ...] + [W, [a, b], ...]
    std::vector<Bracket> merged;
    merged.reserve(tail.size() - 1);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (i == k - 1) {
        merged.push_back(Bracket::pair(tail[k - 1], tail[k]));
        ++i;
      } else {
        merged.push_back(tail[i]);
      }
    }
    std::swap(tail[k - 1], tail[k]);
    odin(std::move(tail), out, done);
    odin(std::move(merged), out, done);
  }

 private:
  FrobeniusParams params_;
  std::vector<Bracket> head_;
  std::set<std::int64_t> d_;
};

RewriteResult start(const Rewriter& rw, const std::vector<IndexedGenerator>& tail, std::vector<Bracket>& tail_items) {
  RewriteResult out;
  out.d_set.assign(rw.d().begin(), rw.d().end());
  for (const auto& g : tail) tail_items.push_back(Bracket::letter(g));
  FormalCommutator input{rw.head(), tail_items};
  out.input = normalize(input.expr());
  return out;
}

void finish(RewriteResult& out) {
  HallRewriter hr;
  FreeLieElement sum;
  for (const auto& k : out.kept) sum += hr.normalize(k.term.expr());
  for (const auto& d : out.dropped) sum += hr.normalize(d.term.expr());
  out.identity_holds = sum == out.input;
}

}  // namespace

RewriteResult odin_rewrite(const std::vector<IndexedGenerator>& head, const std::vector<IndexedGenerator>& tail,
                           const FrobeniusParams& params) {
  Rewriter rw(head, params);
  std::vector<Bracket> items;
  RewriteResult out = start(rw, tail, items);
  rw.odin(items, out, [&](std::vector<Bracket> t) {
    const std::size_t s = t.size();
    out.kept.push_back({{rw.head(), std::move(t)}, s});
  });
  finish(out);
  return out;
}

RewriteResult dva_rewrite(const std::vector<IndexedGenerator>& head, const std::vector<IndexedGenerator>& tail,
                          const FrobeniusParams& params, std::int64_t w) {
  if (w < 1) throw InputError("w must be positive");
  Rewriter rw(head, params);
  std::vector<Bracket> items;
  RewriteResult out = start(rw, tail, items);

  const BigInt cap = capacity_N(static_cast<std::int64_t>(head.size()), params.q);
  auto is_large = [&](const Bracket& b) {
    return BigInt(additive_order(rw.residue(b.index_sum()), params.n)) > cap;
  };
  const std::size_t limit = static_cast<std::size_t>(w - 1) * rw.d().size();

  // Sort key: large-order entries first, grouped by index; small-order
  // entries keep their relative order.
  auto key = [&](const Bracket& b) -> std::pair<int, std::int64_t> {
    if (is_large(b)) return {0, rw.residue(b.index_sum())};
    return {1, 0};
  };

  std::function<void(std::vector<Bracket>)> reorder = [&](std::vector<Bracket> t) {
    if (t.size() <= limit) {
      const std::size_t s = t.size();
      out.kept.push_back({{rw.head(), std::move(t)}, s});
      return;
    }
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (key(t[i]) < key(t[i - 1])) {
          std::vector<Bracket> merged(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
          merged.push_back(Bracket::pair(t[i - 1], t[i]));
          merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
          std::swap(t[i - 1], t[i]);
          rw.odin(std::move(merged), out, reorder);
          swapped = true;
        }
      }
    }
    std::map<std::int64_t, std::int64_t> counts;
    std::size_t leading = 0;
    for (const Bracket& b : t) {
      if (!is_large(b)) break;
      ++leading;
      if (++counts[rw.residue(b.index_sum())] >= w) {
        out.dropped.push_back({{rw.head(), std::move(t)}, DropReason::EngelAnnihilated});
        return;
      }
    }
    out.kept.push_back({{rw.head(), std::move(t)}, leading});
  };

  rw.odin(items, out, reorder);
  finish(out);
  return out;
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental echelon basis over Q; each row is keyed by its least column
// and stored with leading coefficient 1.
class SparseSpan {
 public:
  void reduce(SparseRow& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rational f = it->second;
      for (const auto& [c, x] : row->second) {
        Rational& slot = v[c];
        slot -= f * x;
      }
      for (auto jt = v.lower_bound(col); jt != v.end();) {
        if (jt->second == 0) jt = v.erase(jt);
        else ++jt;
      }
      it = v.lower_bound(col);
    }
  }

  bool insert(SparseRow v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational lead = v.begin()->second;
    for (auto& [c, x] : v) x /= lead;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  bool contains(SparseRow v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseRow> rows_;
};

class MembershipSolver {
 public:
  MembershipSolver(std::int64_t c, const FrobeniusParams& params, const std::vector<std::int64_t>& indices)
      : c_(c), params_(params), indices_(indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      letters_.push_back(Bracket::letter({"y" + std::to_string(i + 1), indices[i]}));
    }
  }

  std::int64_t residue_of(unsigned mask) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (mask & (1U << i)) s = mod_floor(s + mod_floor(indices_[i], params_.n), params_.n);
    }
    return s;
  }

  static std::size_t factorial(std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  }

  SparseRow to_row(const FreeLieElement& e) {
    SparseRow row;
    for (const auto& [w, coeff] : e.terms()) {
      auto [it, inserted] = columns_.try_emplace(w, columns_.size());
      row[it->second] = Rational(coeff);
    }
    return row;
  }

  // Left-normed [y_min, y_sigma(2), ...] over permutations of the rest.
  const std::vector<FreeLieElement>& full_basis(unsigned mask) {
    auto it = full_.find(mask);
    if (it != full_.end()) return it->second;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (mask & (1U << i)) members.push_back(i);
    }
    std::vector<FreeLieElement> basis;
    std::vector<std::size_t> rest(members.begin() + 1, members.end());
    do {
      std::vector<Bracket> items{letters_[members.front()]};
      for (std::size_t i : rest) items.push_back(letters_[i]);
      basis.push_back(hr_.normalize(Bracket::left_normed(items)));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return full_.emplace(mask, std::move(basis)).first->second;
  }

  bool independent(const std::vector<std::int64_t>& seq) const {
    for (std::int64_t s : seq) {
      if (s == 0) return false;
    }
    return !is_r_dependent(seq, params_);
  }

  // Ordered partitions of mask into `parts` nonempty blocks.
  void partitions(unsigned mask, std::size_t parts, std::vector<unsigned>& acc,
                  const std::function<bool(const std::vector<unsigned>&)>& visit, bool& stop) {
    if (stop) return;
    if (parts == 1) {
      acc.push_back(mask);
      if (visit(acc)) stop = true;
      acc.pop_back();
      return;
    }
    for (unsigned sub = (mask - 1) & mask; sub != 0 && !stop; sub = (sub - 1) & mask) {
      acc.push_back(sub);
      partitions(mask & ~sub, parts - 1, acc, visit, stop);
      acc.pop_back();
    }
  }

  // Ideal component on each subset, smallest subsets first.
  std::vector<FreeLieElement> ideal_component(unsigned mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t full_dim = factorial(k - 1);
    if (residue_of(mask) == 0) return full_basis(mask);

    SparseSpan span;
    std::vector<FreeLieElement> basis;
    auto add = [&](const FreeLieElement& e) {
      if (span.insert(to_row(e))) basis.push_back(e);
      return span.size() == full_dim;
    };
    bool full = false;

    for (std::size_t i = 0; i < indices_.size() && !full; ++i) {
      if (!(mask & (1U << i)) || k == 1) continue;
      const FreeLieElement x = FreeLieElement::word(letters_[i]);
      for (const FreeLieElement& v : ideal_.at(mask & ~(1U << i))) {
        if ((full = add(hr_.bracket(v, x)))) break;
      }
    }

    const std::size_t parts = static_cast<std::size_t>(c_ + 1);
    if (!full && parts <= k) {
      std::vector<unsigned> acc;
      partitions(mask, parts, acc, [&](const std::vector<unsigned>& blocks) {
        std::vector<std::int64_t> seq;
        for (unsigned b : blocks) seq.push_back(residue_of(b));
        if (!independent(seq)) return false;
        // All products [P_1, ..., P_{c+1}] with P_j in the full component.
        std::vector<FreeLieElement> prods{};
        bool first = true;
        for (unsigned b : blocks) {
          const auto& pb = full_basis(b);
          std::vector<FreeLieElement> next;
          if (first) {
            next = pb;
          } else {
            for (const auto& a : prods) {
              for (const auto& p : pb) next.push_back(hr_.bracket(a, p));
            }
          }
          prods = std::move(next);
          first = false;
        }
        for (const auto& e : prods) {
          if (add(e)) return true;
        }
        return false;
      }, full);
    }
    if (full) return full_basis(mask);
    return basis;
  }

  MembershipResult run(std::size_t f) {
    const unsigned all = (1U << indices_.size()) - 1;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m <= all; ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    for (unsigned m : masks) ideal_[m] = ideal_component(m);

    MembershipResult out;
    out.generators = indices_.size();
    out.component_dimension = factorial(indices_.size() - 1);
    out.ideal_dimension = ideal_.at(all).size();
    const Bracket d = delta(f, letters_);
    out.delta = d.to_string();
    SparseSpan span;
    for (const auto& e : ideal_.at(all)) span.insert(to_row(e));
    out.member = span.contains(to_row(hr_.normalize(d)));
    return out;
  }

 private:
  std::int64_t c_;
  FrobeniusParams params_;
  std::vector<std::int64_t> indices_;
  std::vector<Bracket> letters_;
  HallRewriter hr_;
  std::map<HallWord, std::size_t> columns_;
  std::map<unsigned, std::vector<FreeLieElement>> full_;
  std::map<unsigned, std::vector<FreeLieElement>> ideal_;
};

}  // namespace

MembershipResult razresh_membership(std::int64_t c, const FrobeniusParams& params,
                                    const std::vector<std::int64_t>& indices, std::size_t max_weight) {
  params.check_well_formed();
  if (c < 0) throw InputError("c must be non-negative");
  std::size_t f = 0;
  while ((std::size_t{1} << f) < indices.size()) ++f;
  if (indices.empty() || (std::size_t{1} << f) != indices.size()) {
    throw InputError("delta_f needs 2^f generator indices, got " + std::to_string(indices.size()));
  }
  if (indices.size() > max_weight) {
    throw CapacityError("delta_" + std::to_string(f) + " has weight " + std::to_string(indices.size()) +
                        " above the weight cap " + std::to_string(max_weight));
  }
  if (indices.size() > 16) throw CapacityError("at most 16 generators are supported");
  return MembershipSolver(c, params, indices).run(f);
}

}  // namespace flab
