#pragma once

#include <string>
#include <vector>

#include "greenp/stable_ring.hpp"

namespace greenp {

struct ArVertex {
  bool projective = false;
  StableClass cls{};  // when !projective
  int t = 0;          // when projective

  static ArVertex stable(const StableClass& c) { return {false, c, 0}; }
  static ArVertex proj(int t) { return {true, {}, t}; }
  auto operator<=>(const ArVertex&) const = default;
};

// "O^i(D_j)" for stable vertices (including i = 0), "P_t" for projectives.
std::string dot_label(const ArVertex& v);

struct ArEdge {
  ArVertex from;
  ArVertex to;
  auto operator<=>(const ArEdge&) const = default;
};

class ArQuiver {
 public:
  ArQuiver(const PrimeContext& ctx, std::vector<ArVertex> vertices,
           std::vector<ArEdge> edges);

  const PrimeContext& context() const { return ctx_; }
  const std::vector<ArVertex>& vertices() const { return vertices_; }
  // Sorted; parallel arrows appear repeatedly.
  const std::vector<ArEdge>& edges() const { return edges_; }
  int edge_count(const ArVertex& from, const ArVertex& to) const;

 private:
  PrimeContext ctx_;
  std::vector<ArVertex> vertices_;
  std::vector<ArEdge> edges_;
};

// Stable arrows Omega^k(D_j) -> Omega^{k-1}(D_{j+-1}); projective P_t sits on
// the path Omega(D_t) -> P_t -> Omega^{-1}(D_t).
ArQuiver ar_quiver(const PrimeContext& ctx);

// For all stable X, Y: #(X -> Y) == #(tau Y -> X) with tau = Omega^2.
bool mesh_symmetric(const ArQuiver& q);

std::string to_dot(const ArQuiver& q);

}  // namespace greenp
