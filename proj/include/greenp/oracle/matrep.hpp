#pragma once

// Matrix representations of S_p over GF(p), given by the images of the
// transposition s = (1 2) and the p-cycle t = (1 2 ... p). Matrices act on
// column vectors.

#include <array>
#include <vector>

#include "greenp/diagram.hpp"
#include "greenp/ffalg/matrix.hpp"

namespace greenp::oracle {

using ffalg::FpMatrix;
using ffalg::PrimeField;

class MatRep {
 public:
  // Throws DomainError on shape mismatch or entries over the wrong field.
  MatRep(const PrimeContext& ctx, FpMatrix s, FpMatrix t);

  // The zero-dimensional module.
  static MatRep zero(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  const PrimeField& field() const { return s_.field(); }
  std::size_t degree() const { return s_.rows(); }
  const FpMatrix& gen_s() const { return s_; }
  const FpMatrix& gen_t() const { return t_; }
  std::array<const FpMatrix*, 2> gens() const { return {&s_, &t_}; }

  // s^2 = t^p = (st)^{p-1} = (s t^{-1} s t)^3 = 1 and
  // (s t^{-k} s t^k)^2 = 1 for 2 <= k <= p/2.
  bool satisfies_relations() const;

 private:
  PrimeContext ctx_;
  FpMatrix s_;
  FpMatrix t_;
};

MatRep direct_sum(const MatRep& a, const MatRep& b);

// The action on the invariant subspace spanned by the columns of basis
// (which must be linearly independent).
MatRep restrict_to(const MatRep& m, const FpMatrix& basis);

// Base change: the action in the basis given by the columns of q.
MatRep conjugate(const MatRep& m, const FpMatrix& q, const FpMatrix& q_inv);

}  // namespace greenp::oracle
