#pragma once

// j-diagram combinatorics for the principal block of F S_p.
//
// For a fixed simple D_j the j-rectangle has corners (0,j), (j,0),
// (p-2,p-2-j), (p-2-j,p-2). Layer i of the rectangle runs between the grid
// bounds a(i,j) <= b(i,j); the points l(i,j) .. r(i,j) step 2 form R(i,j),
// the simple constituents of the core of D_i (x) D_j.

#include <cstdint>
#include <vector>

namespace greenp {

class PrimeContext {
 public:
  static constexpr int kMaxPrime = 1'000'000;

  // Throws DomainError unless p is an odd prime in [3, kMaxPrime].
  explicit PrimeContext(int p);

  int p() const { return p_; }
  // Number of simples in b0, also the range bound for syzygy indices.
  int rank() const { return p_ - 1; }
  int period() const { return 2 * p_ - 2; }

  bool operator==(const PrimeContext&) const = default;

 private:
  int p_;
};

bool is_prime(std::int64_t n);

struct GridBounds {
  int a;
  int b;
  bool operator==(const GridBounds&) const = default;
};

struct LayerEnds {
  int l;
  int r;
  bool operator==(const LayerEnds&) const = default;
};

// Layer i of rectangle j with both the grid bounds and the layer ends.
struct RectProfile {
  int i;
  int j;
  int a;
  int b;
  int l;
  int r;
};

// Sorted arithmetic progression l, l+2, ..., r.
class RSet {
 public:
  RSet() = default;
  RSet(int first, int last);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int t) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const RSet&) const = default;

 private:
  std::vector<int> members_;
};

// i in [0, p-1], j in [0, p-2].
GridBounds rect_bounds(const PrimeContext& ctx, int i, int j);
// i, j in [0, p-2].
LayerEnds layer_ends(const PrimeContext& ctx, int i, int j);
RectProfile rect_profile(const PrimeContext& ctx, int i, int j);
RSet r_set(const PrimeContext& ctx, int i, int j);

// Composition factors of the hook Specht module S_i, i in [0, p-1]:
// S_0 = D_0, S_i ~ D_{i-1} + D_i (head D_i), S_{p-1} = D_{p-2}.
std::vector<int> s_factors(const PrimeContext& ctx, int i);

// Precomputed R(i,j) for all i, j in [0, p-2]. Immutable after construction.
class RSetTable {
 public:
  explicit RSetTable(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  const RSet& at(int i, int j) const;

 private:
  PrimeContext ctx_;
  std::vector<RSet> sets_;
};

}  // namespace greenp
