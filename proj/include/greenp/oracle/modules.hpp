#pragma once

// Explicit base modules for S_p over GF(p).

#include <vector>

#include "greenp/oracle/matrep.hpp"

namespace greenp::oracle {

// Permutation matrix of a permutation of {0, ..., n-1}: e_k -> e_{perm[k]}.
FpMatrix permutation_matrix(const PrimeField& f, const std::vector<int>& perm);

MatRep trivial_module(const PrimeContext& ctx);

// The natural permutation module on tabloids t_1, ..., t_p.
MatRep perm_module(const PrimeContext& ctx);

// S_1 in the basis e_k = t_k - t_1, k = 2..p.
MatRep specht_s1(const PrimeContext& ctx);

// Hook Specht module S_i = Lambda^i S_1, i in [0, p-1].
MatRep specht_module(const PrimeContext& ctx, int i);

// D_1 = S_1 / <sum e_k>, then D_j = Lambda^j D_1.
MatRep simple_d(const PrimeContext& ctx, int j);

// Lambda^{i+1} of the permutation module: the module induced from the
// trivial (x) sign representation of S_{p-i-1} x S_{i+1}. It is P_i.
MatRep signed_young_module(const PrimeContext& ctx, int i);

// k-th exterior power; basis of k-subsets in colexicographic order.
MatRep exterior_power(const MatRep& m, int k);

MatRep tensor_rep(const MatRep& a, const MatRep& b);

// Contragredient: generators act by the inverse transpose.
MatRep dual(const MatRep& m);

// k-subsets of {0, ..., n-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int n, int k);

}  // namespace greenp::oracle
