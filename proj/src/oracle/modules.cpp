#include "greenp/oracle/modules.hpp"

#include <map>
#include <numeric>

#include "greenp/error.hpp"
#include "greenp/ffalg/linalg.hpp"

namespace greenp::oracle {
namespace {

std::vector<int> transposition(int p) {
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[1]);
  return perm;
}

std::vector<int> long_cycle(int p) {
  std::vector<int> perm(p);
  for (int k = 0; k < p; ++k) perm[k] = (k + 1) % p;
  return perm;
}

// Exterior power of a single matrix: entry (B, A) is the minor g[B, A].
FpMatrix wedge(const FpMatrix& g, const std::vector<std::vector<int>>& subsets,
               int k) {
  const PrimeField& f = g.field();
  const std::size_t n = subsets.size();
  FpMatrix out(f, n, n);
  FpMatrix minor(f, k, k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) minor(r, c) = g(subsets[b][r], subsets[a][c]);
      out(b, a) = ffalg::determinant(minor);
    }
  return out;
}

}  // namespace

FpMatrix permutation_matrix(const PrimeField& f, const std::vector<int>& perm) {
  FpMatrix m(f, perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) m(perm[k], k) = 1;
  return m;
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    // Colex successor: bump the first entry that can move, reset the ones
    // below it.
    int i = 0;
    while (i < k && (i + 1 < k ? cur[i] + 1 == cur[i + 1] : cur[i] + 1 == n)) ++i;
    if (i == k) break;
    ++cur[i];
    for (int r = 0; r < i; ++r) cur[r] = r;
  }
  return out;
}

MatRep trivial_module(const PrimeContext& ctx) {
  const PrimeField f(ctx.p());
  return MatRep(ctx, FpMatrix::identity(f, 1), FpMatrix::identity(f, 1));
}

MatRep perm_module(const PrimeContext& ctx) {
  const PrimeField f(ctx.p());
  return MatRep(ctx, permutation_matrix(f, transposition(ctx.p())),
                permutation_matrix(f, long_cycle(ctx.p())));
}

MatRep specht_s1(const PrimeContext& ctx) {
  const int p = ctx.p();
  const PrimeField f(p);
  // Coordinates index e_2, ..., e_p as 0, ..., p-2; sigma e_k = e_{sigma k} - e_{sigma 1}
  // with e_1 = 0.
  auto action = [&](const std::vector<int>& perm) {
    FpMatrix m(f, p - 1, p - 1);
    for (int k = 1; k < p; ++k) {
      const int img = perm[k], base = perm[0];
      if (img != 0) m(img - 1, k - 1) = f.add(m(img - 1, k - 1), 1);
      if (base != 0) m(base - 1, k - 1) = f.sub(m(base - 1, k - 1), 1);
    }
    return m;
  };
  return MatRep(ctx, action(transposition(p)), action(long_cycle(p)));
}

MatRep specht_module(const PrimeContext& ctx, int i) {
  if (i < 0 || i > ctx.p() - 1)
    throw DomainError("Specht index " + std::to_string(i) + " out of range");
  if (i == 0) return trivial_module(ctx);
  return exterior_power(specht_s1(ctx), i);
}

MatRep simple_d(const PrimeContext& ctx, int j) {
  const int p = ctx.p();
  if (j < 0 || j > p - 2)
    throw DomainError("simple index " + std::to_string(j) + " out of range");
  if (j == 0) return trivial_module(ctx);
  const MatRep s1 = specht_s1(ctx);
  const PrimeField& f = s1.field();
  // Quotient by <e_2 + ... + e_p>: keep e_2..e_{p-1}; coefficient of e_k
  // becomes c_k - c_p.
  auto quotient = [&](const FpMatrix& g) {
    FpMatrix m(f, p - 2, p - 2);
    for (int c = 0; c < p - 2; ++c)
      for (int r = 0; r < p - 2; ++r) m(r, c) = f.sub(g(r, c), g(p - 2, c));
    return m;
  };
  const MatRep d1(ctx, quotient(s1.gen_s()), quotient(s1.gen_t()));
  return j == 1 ? d1 : exterior_power(d1, j);
}

MatRep signed_young_module(const PrimeContext& ctx, int i) {
  if (i < 0 || i > ctx.p() - 2)
    throw DomainError("projective index " + std::to_string(i) + " out of range");
  return exterior_power(perm_module(ctx), i + 1);
}

MatRep exterior_power(const MatRep& m, int k) {
  const int n = static_cast<int>(m.degree());
  if (k < 0 || k > n) throw DomainError("exterior power out of range");
  if (k == 0) return trivial_module(m.context());
  const auto subsets = colex_subsets(n, k);
  return MatRep(m.context(), wedge(m.gen_s(), subsets, k), wedge(m.gen_t(), subsets, k));
}

MatRep tensor_rep(const MatRep& a, const MatRep& b) {
  if (!(a.context() == b.context())) throw DomainError("tensor of modules for different p");
  return MatRep(a.context(), ffalg::kronecker(a.gen_s(), b.gen_s()),
                ffalg::kronecker(a.gen_t(), b.gen_t()));
}

MatRep dual(const MatRep& m) {
  if (m.degree() == 0) return m;
  return MatRep(m.context(), ffalg::inverse(m.gen_s()).transpose(),
                ffalg::inverse(m.gen_t()).transpose());
}

}  // namespace greenp::oracle
