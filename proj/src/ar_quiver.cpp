#include "greenp/ar_quiver.hpp"

#include <algorithm>
#include <sstream>

namespace greenp {

std::string dot_label(const ArVertex& v) {
  if (v.projective) return "P_" + std::to_string(v.t);
  return "O^" + std::to_string(v.cls.shift) + "(D_" + std::to_string(v.cls.j) +
         ")";
}

ArQuiver::ArQuiver(const PrimeContext& ctx, std::vector<ArVertex> vertices,
                   std::vector<ArEdge> edges)
    : ctx_(ctx), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

int ArQuiver::edge_count(const ArVertex& from, const ArVertex& to) const {
  const ArEdge key{from, to};
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

ArQuiver ar_quiver(const PrimeContext& ctx) {
  const int n = ctx.rank();
  std::vector<ArVertex> vertices;
  std::vector<ArEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vertices.push_back(ArVertex::stable({i, j}));
  for (int t = 0; t < n; ++t) vertices.push_back(ArVertex::proj(t));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int jj : {j - 1, j + 1}) {
        if (jj < 0 || jj > n - 1) continue;
        edges.push_back({ArVertex::stable({i, j}),
                         ArVertex::stable(canonicalize(ctx, i - 1, jj))});
      }
  for (int t = 0; t < n; ++t) {
    const ArVertex proj = ArVertex::proj(t);
    edges.push_back({ArVertex::stable(canonicalize(ctx, 1, t)), proj});
    edges.push_back({proj, ArVertex::stable(canonicalize(ctx, -1, t))});
  }
  return ArQuiver(ctx, std::move(vertices), std::move(edges));
}

bool mesh_symmetric(const ArQuiver& q) {
  const PrimeContext& ctx = q.context();
  std::vector<ArVertex> stable;
  for (const ArVertex& v : q.vertices())
    if (!v.projective) stable.push_back(v);
  for (const ArVertex& x : stable)
    for (const ArVertex& y : stable) {
      const ArVertex tau_y =
          ArVertex::stable(canonicalize(ctx, y.cls.shift + 2, y.cls.j));
      if (q.edge_count(x, y) != q.edge_count(tau_y, x)) return false;
    }
  return true;
}

std::string to_dot(const ArQuiver& q) {
  std::ostringstream out;
  out << "digraph ar_quiver_p" << q.context().p() << " {\n";
  for (const ArVertex& v : q.vertices())
    out << "  \"" << dot_label(v) << "\""
        << (v.projective ? " [shape=box]" : "") << ";\n";
  for (const ArEdge& e : q.edges())
    out << "  \"" << dot_label(e.from) << "\" -> \"" << dot_label(e.to)
        << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace greenp
