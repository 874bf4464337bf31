#include "greenp/diagram.hpp"

#include <algorithm>
#include <string>

#include "greenp/error.hpp"

namespace greenp {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(int p) : p_(p) {
  if (p == 2)
    throw DomainError("p = 2 is not supported: the j-diagram needs p >= 3");
  if (p < 3 || p > kMaxPrime || !is_prime(p))
    throw DomainError("p must be an odd prime in [3, " +
                      std::to_string(kMaxPrime) + "], got " +
                      std::to_string(p));
}

namespace {

void check_index(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw DomainError(std::string(what) + " = " + std::to_string(value) +
                      " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

}  // namespace

RSet::RSet(int first, int last) {
  for (int t = first; t <= last; t += 2) members_.push_back(t);
}

bool RSet::contains(int t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

GridBounds rect_bounds(const PrimeContext& ctx, int i, int j) {
  const int p = ctx.p();
  check_index("layer i", i, 0, p - 1);
  check_index("rectangle j", j, 0, p - 2);
  const int a = i <= j ? j - i : i - j - 1;
  const int b = i <= p - 2 - j ? j + i : 2 * p - j - 3 - i;
  return {a, b};
}

LayerEnds layer_ends(const PrimeContext& ctx, int i, int j) {
  const int p = ctx.p();
  check_index("layer i", i, 0, p - 2);
  check_index("rectangle j", j, 0, p - 2);
  const auto [a, b] = rect_bounds(ctx, i, j);
  return {a + (i > j ? 1 : 0), b - (i > p - 2 - j ? 1 : 0)};
}

RectProfile rect_profile(const PrimeContext& ctx, int i, int j) {
  const auto [a, b] = rect_bounds(ctx, i, j);
  const auto [l, r] = layer_ends(ctx, i, j);
  return {i, j, a, b, l, r};
}

RSet r_set(const PrimeContext& ctx, int i, int j) {
  const auto [l, r] = layer_ends(ctx, i, j);
  return RSet(l, r);
}

std::vector<int> s_factors(const PrimeContext& ctx, int i) {
  const int p = ctx.p();
  check_index("Specht index i", i, 0, p - 1);
  if (i == 0) return {0};
  if (i == p - 1) return {p - 2};
  return {i - 1, i};
}

RSetTable::RSetTable(const PrimeContext& ctx) : ctx_(ctx) {
  const int n = ctx.rank();
  sets_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sets_.push_back(r_set(ctx, i, j));
}

const RSet& RSetTable::at(int i, int j) const {
  const int n = ctx_.rank();
  check_index("i", i, 0, n - 1);
  check_index("j", j, 0, n - 1);
  return sets_[static_cast<std::size_t>(i) * n + j];
}

}  // namespace greenp
