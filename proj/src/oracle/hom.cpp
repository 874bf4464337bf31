#include "greenp/oracle/hom.hpp"

#include <random>

#include "greenp/error.hpp"
#include "greenp/ffalg/linalg.hpp"

namespace greenp::oracle {
namespace {

// Incremental row-echelon basis for membership tests.
class Echelon {
 public:
  Echelon(const PrimeField& f, std::size_t n) : f_(f), n_(n) {}

  std::size_t size() const { return rows_.size(); }

  // Reduces v in place; true if a new pivot was added.
  bool insert(std::vector<PrimeField::Elem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (c == 0) continue;
      const auto neg = f_.neg(c);
      for (std::size_t k = 0; k < n_; ++k) v[k] = f_.fma(v[k], neg, rows_[r][k]);
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    const auto inv = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, inv);
    // Keep earlier rows reduced against the new pivot.
    for (auto& row : rows_) {
      const auto c = row[piv];
      if (c == 0) continue;
      const auto neg = f_.neg(c);
      for (std::size_t k = 0; k < n_; ++k) row[k] = f_.fma(row[k], neg, v[k]);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<std::vector<PrimeField::Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<PrimeField::Elem> act(const FpMatrix& g, const std::vector<PrimeField::Elem>& v) {
  const PrimeField& f = g.field();
  std::vector<PrimeField::Elem> out(g.rows(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto* row = g.row_ptr(r);
    PrimeField::Elem acc = 0;
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (v[c]) acc = f.fma(acc, row[c], v[c]);
    out[r] = acc;
  }
  return out;
}

// Row-reduced accumulator of linear constraints; rows are flushed through
// rref once enough have been collected.
class ConstraintSet {
 public:
  ConstraintSet(const PrimeField& f, std::size_t cols)
      : f_(f), cols_(cols), reduced_(f, 0, cols), pending_(f, 0, cols) {}

  void add(const FpMatrix& rows) {
    pending_ = ffalg::vstack(pending_, rows);
    if (pending_.rows() >= std::max<std::size_t>(cols_, 1)) flush();
  }

  FpMatrix kernel() {
    flush();
    return ffalg::kernel_basis(reduced_);
  }

 private:
  void flush() {
    if (pending_.rows() == 0) return;
    const auto rr = ffalg::rref(ffalg::vstack(reduced_, pending_));
    reduced_ = rr.reduced.block(0, 0, rr.rank, cols_);
    pending_ = FpMatrix(f_, 0, cols_);
  }

  PrimeField f_;
  std::size_t cols_;
  FpMatrix reduced_;
  FpMatrix pending_;
};

}  // namespace

SpinBasis::SpinBasis(const MatRep& m, std::uint64_t seed)
    : m_(m), basis_(m.field(), m.degree(), 0), basis_inv_(m.field(), 0, m.degree()) {
  const PrimeField& f = m.field();
  const std::size_t n = m.degree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
  Echelon ech(f, n);
  std::vector<std::vector<PrimeField::Elem>> vecs;
  const auto gens = m.gens();
  std::size_t next = 0;
  while (vecs.size() < n) {
    if (next == vecs.size()) {
      // Queue exhausted without spanning: add a fresh random seed.
      std::vector<PrimeField::Elem> v(n);
      for (auto& x : v) x = coef(rng);
      if (!ech.insert(v)) continue;
      steps_.push_back({-1, -1, static_cast<int>(seed_count_++)});
      vecs.push_back(std::move(v));
      continue;
    }
    for (int g = 0; g < 2 && vecs.size() < n; ++g) {
      std::vector<PrimeField::Elem> w = act(*gens[g], vecs[next]);
      if (ech.insert(w)) {
        steps_.push_back({static_cast<int>(next), g, steps_[next].seed});
        vecs.push_back(std::move(w));
      }
    }
    ++next;
  }
  // Every generator image that did not create a basis vector is a relation.
  std::vector<std::array<bool, 2>> defining(n, {false, false});
  for (const Step& st : steps_)
    if (st.parent >= 0) defining[st.parent][st.gen] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (int g = 0; g < 2; ++g)
      if (!defining[k][g]) relations_.push_back({static_cast<int>(k), g});

  basis_ = FpMatrix(f, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) basis_(r, k) = vecs[k][r];
  basis_inv_ = n == 0 ? FpMatrix(f, 0, 0) : ffalg::inverse(basis_);
}

std::vector<FpMatrix> hom_space(const SpinBasis& sa, const MatRep& b) {
  const MatRep& a = sa.module();
  if (!(a.context() == b.context())) throw DomainError("Hom between modules for different p");
  const PrimeField& f = a.field();
  const std::size_t na = a.degree(), nb = b.degree();
  std::vector<FpMatrix> out;
  if (na == 0 || nb == 0) return out;
  const std::size_t s = sa.seeds();
  const auto& steps = sa.steps();
  const auto bgens = b.gens();
  const auto agens = a.gens();

  // phi(u_k) = Y_k y_{seed(k)}, where y_i is the unknown image of seed i.
  std::vector<FpMatrix> y;
  y.reserve(na);
  for (std::size_t k = 0; k < na; ++k) {
    const auto& st = steps[k];
    y.push_back(st.parent < 0 ? FpMatrix::identity(f, nb) : *bgens[st.gen] * y[st.parent]);
  }

  ConstraintSet cons(f, s * nb);
  for (const auto& rel : sa.relations()) {
    // a(g) u_m = sum_k c_k u_k, so b(g) phi(u_m) = sum_k c_k phi(u_k).
    FpMatrix um = sa.basis().column(rel.source);
    const FpMatrix c = sa.basis_inverse() * (*agens[rel.gen] * um);
    FpMatrix row(f, nb, s * nb);
    const FpMatrix lhs = *bgens[rel.gen] * y[rel.source];
    const std::size_t src_block = steps[rel.source].seed * nb;
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t q = 0; q < nb; ++q) row(r, src_block + q) = lhs(r, q);
    for (std::size_t k = 0; k < na; ++k) {
      const auto ck = c(k, 0);
      if (ck == 0) continue;
      const auto neg = f.neg(ck);
      const std::size_t block = steps[k].seed * nb;
      for (std::size_t r = 0; r < nb; ++r) {
        auto* dst = row.row_ptr(r) + block;
        const auto* src = y[k].row_ptr(r);
        for (std::size_t q = 0; q < nb; ++q) dst[q] = f.fma(dst[q], neg, src[q]);
      }
    }
    cons.add(row);
  }

  const FpMatrix sol = cons.kernel();
  for (std::size_t v = 0; v < sol.cols(); ++v) {
    FpMatrix images(f, nb, na);
    for (std::size_t k = 0; k < na; ++k) {
      const std::size_t block = steps[k].seed * nb;
      for (std::size_t r = 0; r < nb; ++r) {
        PrimeField::Elem acc = 0;
        const auto* yr = y[k].row_ptr(r);
        for (std::size_t q = 0; q < nb; ++q)
          if (yr[q]) acc = f.fma(acc, yr[q], sol(block + q, v));
        images(r, k) = acc;
      }
    }
    out.push_back(images * sa.basis_inverse());
  }
  return out;
}

std::vector<FpMatrix> hom_space(const MatRep& a, const MatRep& b, std::uint64_t seed) {
  return hom_space(SpinBasis(a, seed), b);
}

std::size_t hom_dim(const MatRep& a, const MatRep& b, std::uint64_t seed) {
  return hom_space(a, b, seed).size();
}

bool is_homomorphism(const MatRep& a, const MatRep& b, const FpMatrix& x) {
  return x.rows() == b.degree() && x.cols() == a.degree() &&
         x * a.gen_s() == b.gen_s() * x && x * a.gen_t() == b.gen_t() * x;
}

}  // namespace greenp::oracle
