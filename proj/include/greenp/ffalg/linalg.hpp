#pragma once

// Exact dense linear algebra shared by the upsilon computations and the
// oracle: row reduction, kernels, solving, characteristic and minimal
// polynomials. Everything is generic over the field policy.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greenp/ffalg/matrix.hpp"
#include "greenp/ffalg/poly.hpp"

namespace greenp::ffalg {

template <class Field>
struct RrefResult {
  Matrix<Field> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form by Gauss-Jordan elimination.
template <class Field>
RrefResult<Field> rref(Matrix<Field> m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(r, k));
    const auto inv = f.inv(m(r, c));
    auto* prow = m.row_ptr(r);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto* row = m.row_ptr(i);
      if (f.is_zero(row[c])) continue;
      const auto factor = f.neg(row[c]);
      for (std::size_t k = c; k < cols; ++k) row[k] = f.fma(row[k], factor, prow[k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return rref(m).rank;
}

// Columns form a basis of {v : M v = 0}.
template <class Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const Field& f = m.field();
  const RrefResult<Field> rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  Matrix<Field> basis(f, cols, cols - rr.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i)
      basis(rr.pivots[i], k) = f.neg(rr.reduced(i, free));
    ++k;
  }
  return basis;
}

// Columns form a basis of the column space of M (a subset of M's columns).
template <class Field>
Matrix<Field> column_space(const Matrix<Field>& m) {
  const RrefResult<Field> rr = rref(m);
  Matrix<Field> out(m.field(), m.rows(), rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, rr.pivots[k]);
  return out;
}

// X with A X = B; throws std::domain_error when B is not in the column space.
// When A has dependent columns the free unknowns are set to zero.
template <class Field>
Matrix<Field> solve(const Matrix<Field>& a, const Matrix<Field>& b) {
  const Field& f = a.field();
  const RrefResult<Field> rr = rref(hstack(a, b));
  Matrix<Field> x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    const std::size_t pc = rr.pivots[i];
    if (pc >= a.cols()) throw std::domain_error("linear system is inconsistent");
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = rr.reduced(i, a.cols() + c);
  }
  return x;
}

template <class Field>
Matrix<Field> inverse(const Matrix<Field>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  const RrefResult<Field> rr =
      rref(hstack(a, Matrix<Field>::identity(a.field(), n)));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  return rr.reduced.block(0, n, n, n);
}

template <class Field>
typename Field::Elem determinant(Matrix<Field> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.neg(f.mul(m(i, c), inv));
      for (std::size_t k = c; k < n; ++k) m(i, k) = f.fma(m(i, k), factor, m(c, k));
    }
  }
  return det;
}

// Characteristic polynomial det(xI - A), via reduction to Hessenberg form.
template <class Field>
Poly<Field> char_poly(const Matrix<Field>& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix<Field> h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && f.is_zero(h(piv, j))) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    const auto inv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      if (f.is_zero(h(r, j))) continue;
      const auto u = f.mul(h(r, j), inv);
      const auto neg_u = f.neg(u);
      for (std::size_t k = 0; k < n; ++k) h(r, k) = f.fma(h(r, k), neg_u, h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) h(k, j + 1) = f.fma(h(k, j + 1), u, h(k, r));
    }
  }
  std::vector<Poly<Field>> p;
  p.reserve(n + 1);
  p.push_back(Poly<Field>::constant(f, f.one()));
  const Poly<Field> x = Poly<Field>::x(f);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly<Field> next = (x - Poly<Field>::constant(f, h(m - 1, m - 1))) * p[m - 1];
    auto t = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      if (f.is_zero(t)) break;
      next -= p[i - 1].scaled(f.mul(t, h(i - 1, m - 1)));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

// Minimal polynomial of v relative to A: the monic g of least degree with
// g(A) v = 0.
template <class Field>
Poly<Field> local_min_poly(const Matrix<Field>& a, const Matrix<Field>& v) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  // Krylov vectors as columns; grow until A^k v depends on the previous ones.
  Matrix<Field> krylov(f, n, 0);
  Matrix<Field> w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<Field> trial = hstack(krylov, w);
    if (rank(trial) == k) {
      const Matrix<Field> c = solve(krylov, w);
      std::vector<typename Field::Elem> coeffs(k + 1, f.zero());
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = f.neg(c(i, 0));
      coeffs[k] = f.one();
      return Poly<Field>(f, std::move(coeffs));
    }
    krylov = std::move(trial);
    w = a * w;
  }
  throw std::logic_error("Krylov sequence did not terminate");
}

// lcm of the local minimal polynomials of the standard basis vectors.
template <class Field>
Poly<Field> min_poly(const Matrix<Field>& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Poly<Field> out = Poly<Field>::constant(f, f.one());
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<Field> e(f, n, 1);
    e(i, 0) = f.one();
    // Skip vectors already annihilated by the running lcm.
    if (evaluate(out, a).column(i).is_zero()) continue;
    out = lcm(out, local_min_poly(a, e));
  }
  return out;
}

}  // namespace greenp::ffalg
