#include "greenp/upsilon.hpp"

#include <algorithm>
#include <random>

#include "greenp/error.hpp"
#include "greenp/ffalg/factor.hpp"
#include "greenp/ffalg/linalg.hpp"

namespace greenp {

using ffalg::FpMatrix;
using ffalg::Matrix;
using ffalg::PrimeField;
using ffalg::QMatrix;
using ffalg::RationalField;

namespace {

template <class Field>
using Vec = std::vector<typename Field::Elem>;

template <class Field>
Vec<Field> basis_vector(const Field& f, int n, int a) {
  Vec<Field> v(n, f.zero());
  v[a] = f.one();
  return v;
}

template <class Field>
Vec<Field> multiply(const UpsilonAlgebra& alg, const Field& f, const Vec<Field>& x,
                    const Vec<Field>& y) {
  const int n = alg.dim();
  Vec<Field> out(n, f.zero());
  for (int a = 0; a < n; ++a) {
    if (f.is_zero(x[a])) continue;
    for (int b = 0; b < n; ++b) {
      if (f.is_zero(y[b])) continue;
      const auto xy = f.mul(x[a], y[b]);
      for (int t : alg.product(a, b)) out[t] = f.add(out[t], xy);
    }
  }
  return out;
}

template <class Field>
Vec<Field> power(const UpsilonAlgebra& alg, const Field& f, Vec<Field> x,
                 std::uint64_t e) {
  Vec<Field> out = basis_vector(f, alg.dim(), 0);
  while (e) {
    if (e & 1) out = multiply(alg, f, out, x);
    e >>= 1;
    if (e) x = multiply(alg, f, x, x);
  }
  return out;
}

// Matrix of y -> x * y.
template <class Field>
Matrix<Field> mult_matrix(const UpsilonAlgebra& alg, const Field& f,
                          const Vec<Field>& x) {
  const int n = alg.dim();
  Matrix<Field> m(f, n, n);
  for (int a = 0; a < n; ++a) {
    if (f.is_zero(x[a])) continue;
    for (int b = 0; b < n; ++b)
      for (int t : alg.product(a, b)) m(t, b) = f.add(m(t, b), x[a]);
  }
  return m;
}

template <class Field>
Vec<Field> column_vec(const Matrix<Field>& m, std::size_t c) {
  Vec<Field> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

template <class Field>
bool all_nilpotent(const UpsilonAlgebra& alg, const Field& f, const Matrix<Field>& basis) {
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Vec<Field> xn = power(alg, f, column_vec(basis, c), alg.dim());
    if (std::any_of(xn.begin(), xn.end(), [&](const auto& a) { return !f.is_zero(a); }))
      return false;
  }
  return true;
}

// Integer trace form T_ab = sum over t in R(a,b) of tr(L_t).
std::vector<std::vector<long>> trace_form(const UpsilonAlgebra& alg) {
  const int n = alg.dim();
  std::vector<long> tr(n, 0);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) tr[t] += alg.product(t, s).contains(s) ? 1 : 0;
  std::vector<std::vector<long>> form(n, std::vector<long>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t : alg.product(a, b)) form[a][b] += tr[t];
  return form;
}

QMatrix radical_basis_q(const UpsilonAlgebra& alg) {
  const RationalField f;
  const auto form = trace_form(alg);
  const int n = alg.dim();
  QMatrix t(f, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = form[a][b];
  return ffalg::kernel_basis(t);
}

// Column a is D_a^q.
FpMatrix frobenius(const UpsilonAlgebra& alg, const PrimeField& f) {
  const int n = alg.dim();
  FpMatrix m(f, n, n);
  for (int a = 0; a < n; ++a) {
    const Vec<PrimeField> xq = power(alg, f, basis_vector(f, n, a), f.modulus());
    for (int r = 0; r < n; ++r) m(r, a) = xq[r];
  }
  return m;
}

FpMatrix radical_basis_fp(const UpsilonAlgebra& alg, const PrimeField& f) {
  const int n = alg.dim();
  // Least m with q^m >= dim.
  std::uint64_t qm = f.modulus();
  std::uint64_t m = 1;
  while (qm < static_cast<std::uint64_t>(n)) {
    qm *= f.modulus();
    ++m;
  }
  return ffalg::kernel_basis(ffalg::power(frobenius(alg, f), m));
}

template <class Field>
std::vector<std::vector<Rational>> to_rows(const Matrix<Field>& basis) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::vector<Rational> row;
    for (std::size_t r = 0; r < basis.rows(); ++r) row.emplace_back(basis(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

LocalDecomposition local_fp(const UpsilonAlgebra& alg, const PrimeField& f,
                            std::uint64_t seed) {
  const int n = alg.dim();
  const FpMatrix rad = radical_basis_fp(alg, f);
  const FpMatrix id = FpMatrix::identity(f, n);
  // Each local summand contributes exactly the scalars to the fixed points
  // of x -> x^q.
  const std::size_t target = ffalg::kernel_basis(frobenius(alg, f) - id).cols();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
  std::vector<FpMatrix> pieces{id};
  for (int round = 0; pieces.size() < target; ++round) {
    if (round > 512) throw InternalError("local splitting did not converge");
    Vec<PrimeField> x(n);
    for (auto& a : x) a = coef(rng);
    const FpMatrix lx = mult_matrix(alg, f, x);
    std::vector<FpMatrix> next;
    for (const FpMatrix& v : pieces) {
      const FpMatrix restricted = ffalg::solve(v, lx * v);
      const auto factors = ffalg::factor_gfq(ffalg::char_poly(restricted), rng());
      if (factors.size() == 1) {
        next.push_back(v);
        continue;
      }
      for (const auto& fac : factors) {
        const FpMatrix k = ffalg::kernel_basis(
            ffalg::evaluate(pow(fac.poly, fac.multiplicity), restricted));
        next.push_back(v * k);
      }
    }
    pieces = std::move(next);
  }

  LocalDecomposition out;
  for (const FpMatrix& v : pieces) {
    const int nk = static_cast<int>(v.cols());
    const int rad_in_v = static_cast<int>(rad.cols()) + nk -
                         static_cast<int>(ffalg::rank(ffalg::hstack(rad, v)));
    const int dk = nk - rad_in_v;
    if (dk <= 0 || nk % dk != 0) throw InternalError("inconsistent local summand");
    for (int c = 0; c < dk; ++c) out.summand_dims.push_back(nk / dk);
  }
  std::sort(out.summand_dims.begin(), out.summand_dims.end());
  return out;
}

LocalDecomposition local_q(const UpsilonAlgebra& alg, std::uint64_t seed) {
  const RationalField f;
  const int n = alg.dim();
  const int semisimple_dim = n - static_cast<int>(radical_basis_q(alg).cols());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);
  // A generic element has pairwise distinct eigenvalues on the local
  // summands; its root multiplicities are then the summand dimensions.
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec<RationalField> x(n);
    for (auto& a : x) a = coef(rng);
    const auto sqf = ffalg::squarefree_decomposition(
        ffalg::char_poly(mult_matrix(alg, f, x)));
    int distinct = 0;
    for (const auto& fac : sqf) distinct += static_cast<int>(fac.poly.degree());
    if (distinct != semisimple_dim) continue;
    LocalDecomposition out;
    for (const auto& fac : sqf)
      for (long c = 0; c < fac.poly.degree(); ++c)
        out.summand_dims.push_back(fac.multiplicity);
    std::sort(out.summand_dims.begin(), out.summand_dims.end());
    return out;
  }
  LocalDecomposition out;
  out.decided = false;
  return out;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t q) {
  if (q < 2 || q >= (std::int64_t{1} << 31) || !is_prime(q))
    throw DomainError("field order " + std::to_string(q) +
                      " is not a prime below 2^31");
  return FieldSpec(static_cast<std::uint32_t>(q));
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(q_) + ")";
}

int UpsilonAlgebra::structure_constant(int i, int j, int t) const {
  return table_.at(i, j).contains(t) ? 1 : 0;
}

UpsilonAlgebra build_upsilon(const PrimeContext& ctx) {
  if (ctx.p() > UpsilonAlgebra::kMaxPrime)
    throw ResourceError("upsilon is limited to p <= " +
                        std::to_string(UpsilonAlgebra::kMaxPrime));
  UpsilonAlgebra alg(ctx);
  const int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    if (!(alg.product(0, i) == RSet(i, i)) || !(alg.product(i, 0) == RSet(i, i)))
      throw InternalError("D_0 is not the unit");
    for (int j = 0; j < n; ++j)
      if (!(alg.product(i, j) == alg.product(j, i)))
        throw InternalError("structure constants are not symmetric");
  }
  // (D_i D_j) D_k and D_i (D_j D_k) as coefficient vectors.
  std::vector<int> left(n), right(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (int t : alg.product(i, j))
          for (int s : alg.product(t, k)) ++left[s];
        for (int t : alg.product(j, k))
          for (int s : alg.product(i, t)) ++right[s];
        if (left != right) throw InternalError("structure constants are not associative");
      }
  return alg;
}

RadicalResult radical(const UpsilonAlgebra& alg, const FieldSpec& field) {
  RadicalResult out;
  if (field.is_rational()) {
    const RationalField f;
    const QMatrix basis = radical_basis_q(alg);
    out.dimension = static_cast<int>(basis.cols());
    out.basis = to_rows(basis);
    out.nilpotency_verified = all_nilpotent(alg, f, basis);
  } else {
    const PrimeField f(field.modulus());
    const FpMatrix basis = radical_basis_fp(alg, f);
    out.dimension = static_cast<int>(basis.cols());
    out.basis = to_rows(basis);
    out.nilpotency_verified = all_nilpotent(alg, f, basis);
  }
  if (!out.nilpotency_verified)
    throw InternalError("radical basis element is not nilpotent");
  return out;
}

bool is_semisimple(const UpsilonAlgebra& alg, const FieldSpec& field) {
  return radical(alg, field).dimension == 0;
}

LocalDecomposition local_decomposition(const UpsilonAlgebra& alg,
                                       const FieldSpec& field, std::uint64_t seed) {
  if (field.is_rational()) return local_q(alg, seed);
  return local_fp(alg, PrimeField(field.modulus()), seed);
}

BigInt trace_discriminant(const UpsilonAlgebra& alg) {
  const RationalField f;
  const auto form = trace_form(alg);
  const int n = alg.dim();
  QMatrix t(f, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = form[a][b];
  const Rational det = ffalg::determinant(t);
  return boost::multiprecision::numerator(det);
}

}  // namespace greenp
