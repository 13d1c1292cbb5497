#include "flab/graded_lie/examples.hpp"

#include "flab/errors.hpp"

namespace flab {

namespace {

FrobeniusLieExample build(const CoefficientRing& ring, const BigInt& scale) {
  auto e = [&](std::size_t k, const BigInt& c) {
    LieElement v(3, ring.zero());
    v[k] = ring.from_integer(c);
    return v;
  };
  GradedLieRing L = GradedLieRing::from_brackets(ring, 3, {{0, 1, e(2, scale)}, {1, 2, e(0, scale)}, {2, 0, e(1, scale)}});
  std::vector<LieAutomorphism> f;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<LieElement> rows;
    for (std::size_t j = 0; j < 3; ++j) rows.push_back(e(j, i == j ? 1 : -1));
    f.push_back(automorphism_from_rows(L, rows));
  }
  const LieAutomorphism h = automorphism_from_rows(L, {e(1, 1), e(2, 1), e(0, 1)});
  return {std::move(L), std::move(f), h};
}

}  // namespace

FrobeniusLieExample example_simple3(const CoefficientRing& ring) {
  if (ring.characteristic() == 2) throw InputError("example_simple3 needs characteristic different from 2");
  return build(ring, 1);
}

FrobeniusLieExample example_pm(std::int64_t p, std::int64_t m) {
  if (p == 2) throw InputError("example_pm needs an odd prime");
  if (!is_prime(p)) throw InputError("example_pm needs a prime, got " + std::to_string(p));
  if (m < 1) throw InputError("example_pm needs m >= 1");
  if (m > 64) throw CapacityError("example_pm is limited to m <= 64");
  return build(CoefficientRing::integers_mod(big_pow(p, static_cast<std::uint64_t>(m))), p);
}

}  // namespace flab
