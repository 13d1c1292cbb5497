#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flab/graded_lie/examples.hpp"
#include "flab/graded_lie/lie_ring.hpp"
#include "flab/group_engine/action.hpp"

namespace flab {

// Group on the underlying set of a Lie ring over Z/p^m (p >= 5, class <= 3)
// with x o y = x + y + 1/2[x,y] + 1/12[x,[x,y]] - 1/12[y,[x,y]]. Products
// are evaluated from the formula; no table is stored. Element ids are the
// base-p^m digits of the coordinates.
class BchGroup : public Group {
 public:
  static BchGroup from_lie(const GradedLieRing& L, std::size_t max_order = 2000000);

  std::size_t order() const override { return order_; }
  Elem identity() const override { return 0; }
  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  const std::vector<Elem>& generators() const override { return generators_; }

  std::int64_t prime() const { return p_; }
  std::int64_t modulus() const { return m_; }
  std::size_t rank() const { return rank_; }
  std::size_t lie_class() const { return lie_class_; }

  std::vector<std::int64_t> coords(Elem x) const;
  Elem encode(const std::vector<std::int64_t>& v) const;

  // The same additive map, read on the group's underlying set.
  GroupAutomorphism transport(const LieAutomorphism& phi) const;

  // Exhaustive for order <= 512, otherwise `samples` random triples.
  bool check_associativity(std::size_t samples = 20000) const;

 private:
  BchGroup() = default;
  std::vector<std::int64_t> bracket(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;

  std::size_t order_ = 0;
  std::size_t rank_ = 0;
  std::int64_t p_ = 0;
  std::int64_t m_ = 0;
  std::int64_t half_ = 0;
  std::int64_t twelfth_ = 0;
  std::size_t lie_class_ = 0;
  // c_[i][j][k]: coefficient of e_k in [e_i, e_j]
  std::vector<std::vector<std::vector<std::int64_t>>> c_;
  std::vector<Elem> generators_;
};

struct LazardExampleReport {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::size_t group_order = 0;
  bool associative = false;
  bool automorphisms = false;
  bool relations = false;  // h f_i h^-1 = f_{i+1}
  std::size_t centralizer_F_order = 0;
  std::size_t centralizer_H_order = 0;
  std::size_t lie_centralizer_H_order = 0;
  bool centralizer_H_cyclic = false;
  std::optional<std::size_t> group_class;
  std::size_t lie_class = 0;

  bool ok() const;
  Json to_json() const;
};

// Builds the group of example_pm(p, m), transports f_1..f_3 and h and
// sweeps every element for fixed points.
LazardExampleReport lazard_example(std::int64_t p, std::int64_t m);

}  // namespace flab
