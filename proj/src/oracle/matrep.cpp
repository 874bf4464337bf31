#include "greenp/oracle/matrep.hpp"

#include "greenp/error.hpp"
#include "greenp/ffalg/linalg.hpp"

namespace greenp::oracle {

MatRep::MatRep(const PrimeContext& ctx, FpMatrix s, FpMatrix t)
    : ctx_(ctx), s_(std::move(s)), t_(std::move(t)) {
  if (!s_.is_square() || !t_.is_square() || s_.rows() != t_.rows())
    throw DomainError("generator matrices must be square of equal size");
  if (s_.field().modulus() != static_cast<std::uint32_t>(ctx.p()) ||
      t_.field().modulus() != static_cast<std::uint32_t>(ctx.p()))
    throw DomainError("generator matrices must be over GF(p)");
}

MatRep MatRep::zero(const PrimeContext& ctx) {
  const PrimeField f(ctx.p());
  return MatRep(ctx, FpMatrix(f, 0, 0), FpMatrix(f, 0, 0));
}

bool MatRep::satisfies_relations() const {
  const std::size_t n = degree();
  const FpMatrix id = FpMatrix::identity(field(), n);
  const int p = ctx_.p();
  const FpMatrix t_inv = ffalg::power(t_, p - 1);
  if (!(s_ * s_ == id)) return false;
  if (!(t_inv * t_ == id)) return false;
  if (!(ffalg::power(s_ * t_, p - 1) == id)) return false;
  if (!(ffalg::power(s_ * t_inv * s_ * t_, 3) == id)) return false;
  FpMatrix tk = t_;
  FpMatrix tk_inv = t_inv;
  for (int k = 2; 2 * k <= p; ++k) {
    tk = tk * t_;
    tk_inv = tk_inv * t_inv;
    const FpMatrix c = s_ * tk_inv * s_ * tk;
    if (!(c * c == id)) return false;
  }
  return true;
}

MatRep direct_sum(const MatRep& a, const MatRep& b) {
  if (!(a.context() == b.context())) throw DomainError("direct sum of modules for different p");
  return MatRep(a.context(), ffalg::direct_sum(a.gen_s(), b.gen_s()),
                ffalg::direct_sum(a.gen_t(), b.gen_t()));
}

MatRep restrict_to(const MatRep& m, const FpMatrix& basis) {
  if (basis.cols() == 0) return MatRep::zero(m.context());
  try {
    return MatRep(m.context(), ffalg::solve(basis, m.gen_s() * basis),
                  ffalg::solve(basis, m.gen_t() * basis));
  } catch (const std::domain_error&) {
    throw InternalError("restriction to a subspace that is not invariant");
  }
}

MatRep conjugate(const MatRep& m, const FpMatrix& q, const FpMatrix& q_inv) {
  return MatRep(m.context(), q_inv * m.gen_s() * q, q_inv * m.gen_t() * q);
}

}  // namespace greenp::oracle
