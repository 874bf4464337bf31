#pragma once

// Benson-Symonds invariants. For a cyclic Sylow subgroup of order p the
// invariant is additive and multiplicative, and on the Jordan block J_k
// (k < p) it equals sin(k pi / p) / sin(pi / p).

#include <vector>

#include "greenp/error.hpp"
#include "greenp/stable_ring.hpp"

namespace greenp {

// Raised by gamma_cp for k = p: J_p is projective and its invariant is 0.
class ProjectiveBlockError : public DomainError {
 public:
  using DomainError::DomainError;
};

class GammaValue {
 public:
  GammaValue(const PrimeContext& ctx, int sine_index);

  int sine_index() const { return k_; }
  int prime() const { return p_; }
  double value() const { return value_; }

  // Index equality up to k <-> p - k.
  bool equivalent(const GammaValue& other) const;

 private:
  int k_;
  int p_;
  double value_;
};

GammaValue gamma_cp(const PrimeContext& ctx, int k);

// Independent of the shift. Always the nonnegative value.
GammaValue gamma_class(const PrimeContext& ctx, const StableClass& c);

// True for odd j, where the closed form as usually quoted carries a minus
// sign that gamma_class does not reproduce.
bool gamma_sign_note(const StableClass& c);

// Sum of coeff * gamma_class; throws DomainError on negative coefficients.
double gamma_element(const StableElement& e);

constexpr double gamma_projective() { return 0.0; }

// Block sizes in ascending order.
struct JordanType {
  std::vector<int> blocks;
  bool operator==(const JordanType&) const = default;
  int total() const;
};

JordanType make_jordan_type(std::vector<int> blocks);

// Non-free part of Res_E(D_j) for E the Sylow p-cycle subgroup:
// {j+1} for even j, {p-j-1} for odd j.
JordanType restriction_jordan_stable(const PrimeContext& ctx, int j);

// Sum of gamma_cp over blocks, free blocks contributing 0.
double gamma_jordan(const PrimeContext& ctx, const JordanType& type);

}  // namespace greenp
