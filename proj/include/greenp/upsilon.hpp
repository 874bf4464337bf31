#pragma once

// The ring on the non-projective simples D_0, ..., D_{p-2} with
// D_i * D_j = sum over t in R(i,j) of D_t, base-changed to Q or GF(q).

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "greenp/diagram.hpp"
#include "greenp/stable_ring.hpp"

namespace greenp {

using Rational = boost::multiprecision::cpp_rational;

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  // Throws DomainError unless q is a prime below 2^31.
  static FieldSpec prime(std::int64_t q);

  bool is_rational() const { return q_ == 0; }
  std::uint32_t modulus() const { return q_; }
  // "Q" or "GF(q)".
  std::string name() const;

 private:
  explicit FieldSpec(std::uint32_t q) : q_(q) {}
  std::uint32_t q_;
};

class UpsilonAlgebra {
 public:
  static constexpr int kMaxPrime = 101;

  const PrimeContext& context() const { return ctx_; }
  int dim() const { return ctx_.p() - 1; }
  // c_{ij}^t in {0, 1}.
  int structure_constant(int i, int j, int t) const;
  const RSet& product(int i, int j) const { return table_.at(i, j); }

 private:
  friend UpsilonAlgebra build_upsilon(const PrimeContext& ctx);
  explicit UpsilonAlgebra(const PrimeContext& ctx) : ctx_(ctx), table_(ctx) {}

  PrimeContext ctx_;
  RSetTable table_;
};

// Verifies commutativity, the unit and associativity; throws InternalError
// if any fails and ResourceError for p above kMaxPrime.
UpsilonAlgebra build_upsilon(const PrimeContext& ctx);

struct RadicalResult {
  int dimension = 0;
  // Coefficient rows in the basis D_0, ..., D_{p-2}; over GF(q) the entries
  // are the residues in [0, q).
  std::vector<std::vector<Rational>> basis;
  // Every basis row x satisfies x^dim = 0.
  bool nilpotency_verified = false;
};

RadicalResult radical(const UpsilonAlgebra& alg, const FieldSpec& field);
bool is_semisimple(const UpsilonAlgebra& alg, const FieldSpec& field);

struct LocalDecomposition {
  // False only over Q when no sampled element separated the local summands.
  bool decided = true;
  // Dimensions of the local summands after extending scalars to the
  // algebraic closure, sorted ascending.
  std::vector<int> summand_dims;
};

LocalDecomposition local_decomposition(const UpsilonAlgebra& alg,
                                       const FieldSpec& field,
                                       std::uint64_t seed = 0x5EED);

// det of the trace form T_ab = tr(L_{D_a D_b}) over Z.
BigInt trace_discriminant(const UpsilonAlgebra& alg);

}  // namespace greenp
