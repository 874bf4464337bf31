#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenp/ffalg/prime_field.hpp"
#include "greenp/ffalg/rational_field.hpp"

namespace greenp::ffalg {

// Dense row-major matrix over a field policy (PrimeField or RationalField).
template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix(const Field& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Elem* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const {
    for (const Elem& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const { return columns(c, 1); }

  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix out(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix out(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
  }

  Matrix& scale(const Elem& s) {
    for (Elem& x : data_) x = field_.mul(x, s);
    return *this;
  }

  // this += s * o
  Matrix& add_scaled(const Matrix& o, const Elem& s) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] = field_.fma(data_[k], o.data_[k], s);
    return *this;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

using FpMatrix = Matrix<PrimeField>;
using QMatrix = Matrix<RationalField>;

template <class Field>
Matrix<Field> operator+(Matrix<Field> a, const Matrix<Field>& b) {
  return a += b;
}

template <class Field>
Matrix<Field> operator-(Matrix<Field> a, const Matrix<Field>& b) {
  return a -= b;
}

template <class Field>
Matrix<Field> multiply(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape");
  const Field& f = a.field();
  Matrix<Field> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.fma(out(i, j), aik, b(k, j));
    }
  return out;
}

// GF(q) product with 64-bit accumulation and lazy reduction.
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);

template <class Field>
Matrix<Field> operator*(const Matrix<Field>& a, const Matrix<Field>& b) {
  return multiply(a, b);
}

template <class Field>
Matrix<Field> hstack(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape");
  Matrix<Field> out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <class Field>
Matrix<Field> vstack(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape");
  Matrix<Field> out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

template <class Field>
Matrix<Field> direct_sum(const Matrix<Field>& a, const Matrix<Field>& b) {
  Matrix<Field> out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

template <class Field>
Matrix<Field> kronecker(const Matrix<Field>& a, const Matrix<Field>& b) {
  const Field& f = a.field();
  Matrix<Field> out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (f.is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
    }
  return out;
}

template <class Field>
typename Field::Elem trace(const Matrix<Field>& m) {
  auto out = m.field().zero();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    out = m.field().add(out, m(i, i));
  return out;
}

template <class Field>
Matrix<Field> power(Matrix<Field> base, std::uint64_t e) {
  Matrix<Field> out = Matrix<Field>::identity(base.field(), base.rows());
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

}  // namespace greenp::ffalg
