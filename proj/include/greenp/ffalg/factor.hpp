#pragma once

// Polynomial factorization over GF(q) (squarefree, distinct-degree, then
// randomized equal-degree splitting) and squarefree decomposition over Q.

#include <cstdint>
#include <utility>
#include <vector>

#include "greenp/ffalg/poly.hpp"

namespace greenp::ffalg {

template <class Field>
struct Factor {
  Poly<Field> poly;  // monic
  int multiplicity;
};

using FpFactor = Factor<PrimeField>;
using QFactor = Factor<RationalField>;

// f = lc * prod g_i^{m_i} with g_i monic squarefree and pairwise coprime.
// Factors are not necessarily irreducible.
std::vector<FpFactor> squarefree_decomposition(const FpPoly& f);
std::vector<QFactor> squarefree_decomposition(const QPoly& f);

// Input monic squarefree. Returns (g_d, d) where g_d is the product of all
// irreducible factors of degree d.
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f);

// Input monic squarefree with every irreducible factor of degree d.
std::vector<FpPoly> equal_degree(const FpPoly& f, int d, std::uint64_t seed);

// Irreducible factors of a monic squarefree polynomial.
std::vector<FpPoly> factor_squarefree_gfq(const FpPoly& f, std::uint64_t seed);

// Complete factorization of a nonzero polynomial into monic irreducibles
// with multiplicities, sorted by (degree, coefficients). The leading
// coefficient is dropped.
std::vector<FpFactor> factor_gfq(const FpPoly& f, std::uint64_t seed);

// Product of factors^multiplicity (monic).
template <class Field>
Poly<Field> expand(const Field& field, const std::vector<Factor<Field>>& fs) {
  Poly<Field> out = Poly<Field>::constant(field, field.one());
  for (const auto& fac : fs) out = out * pow(fac.poly, fac.multiplicity);
  return out;
}

}  // namespace greenp::ffalg
