#include "greenp/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace greenp {

GammaValue::GammaValue(const PrimeContext& ctx, int sine_index)
    : k_(sine_index), p_(ctx.p()) {
  if (k_ < 1 || k_ > p_ - 1)
    throw DomainError("sine index " + std::to_string(k_) + " outside [1, " +
                      std::to_string(p_ - 1) + "]");
  // sin(k pi/p) = sin((p-k) pi/p); evaluate on the smaller angle so the two
  // representatives agree bit for bit.
  const int k = std::min(k_, p_ - k_);
  const double theta = std::numbers::pi / p_;
  value_ = k == 1 ? 1.0 : std::sin(k * theta) / std::sin(theta);
}

bool GammaValue::equivalent(const GammaValue& other) const {
  return p_ == other.p_ && (k_ == other.k_ || k_ == p_ - other.k_);
}

GammaValue gamma_cp(const PrimeContext& ctx, int k) {
  if (k == ctx.p())
    throw ProjectiveBlockError("J_p is projective; its gamma value is 0");
  return GammaValue(ctx, k);
}

GammaValue gamma_class(const PrimeContext& ctx, const StableClass& c) {
  check_canonical(ctx, c);
  return GammaValue(ctx, c.j + 1);
}

bool gamma_sign_note(const StableClass& c) { return c.j % 2 == 1; }

double gamma_element(const StableElement& e) {
  double out = 0.0;
  for (const auto& [c, m] : e.terms()) {
    if (m < 0)
      throw DomainError("gamma is only defined on genuine modules; " +
                        to_string(c) + " has coefficient " + std::to_string(m));
    out += static_cast<double>(m) * gamma_class(e.context(), c).value();
  }
  return out;
}

int JordanType::total() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

JordanType make_jordan_type(std::vector<int> blocks) {
  std::sort(blocks.begin(), blocks.end());
  return {std::move(blocks)};
}

JordanType restriction_jordan_stable(const PrimeContext& ctx, int j) {
  if (j < 0 || j > ctx.p() - 2)
    throw DomainError("simple index j = " + std::to_string(j) + " out of range");
  return {{j % 2 == 0 ? j + 1 : ctx.p() - j - 1}};
}

double gamma_jordan(const PrimeContext& ctx, const JordanType& type) {
  double out = 0.0;
  for (int size : type.blocks) {
    if (size < 1 || size > ctx.p())
      throw DomainError("Jordan block of size " + std::to_string(size));
    if (size < ctx.p()) out += gamma_cp(ctx, size).value();
  }
  return out;
}

}  // namespace greenp
