#pragma once

// The p = 5 AR quiver as a hand-drawn picture: vertices sit at (column, row)
// positions of an 8 x 4 grid and arrows join neighbouring positions.

#include <algorithm>
#include <map>
#include <vector>

#include "greenp/ar_quiver.hpp"

namespace greenp::testing {

inline ArVertex om(const PrimeContext& ctx, int k, int j) { return ArVertex::stable(canonicalize(ctx, k, j)); }

inline std::map<std::pair<int, int>, ArVertex> p5_positions() {
  const PrimeContext c(5);
  return {
      {{1, 3}, om(c, 6, 0)},  {{3, 3}, om(c, 0, 3)},  {{5, 3}, om(c, 2, 0)},
      {{7, 3}, om(c, 0, 0)},  {{2, 2}, om(c, 5, 1)},  {{3, 2}, ArVertex::proj(2)},
      {{4, 2}, om(c, 3, 1)},  {{6, 2}, om(c, 1, 1)},  {{7, 2}, ArVertex::proj(1)},
      {{8, 2}, om(c, -1, 1)}, {{1, 1}, om(c, 2, 1)},  {{3, 1}, om(c, 0, 1)},
      {{5, 1}, om(c, -2, 1)}, {{7, 1}, om(c, 0, 2)},  {{2, 0}, om(c, 1, 0)},
      {{3, 0}, ArVertex::proj(0)}, {{4, 0}, om(c, -1, 0)}, {{6, 0}, om(c, -3, 0)},
      {{7, 0}, ArVertex::proj(3)}, {{8, 0}, om(c, -5, 0)},
  };
}

inline std::vector<ArEdge> p5_fixture() {
  const PrimeContext c(5);
  auto at = p5_positions();
  std::vector<ArEdge> edges;
  auto add = [&](int x0, int y0, int x1, int y1) { edges.push_back({at.at({x0, y0}), at.at({x1, y1})}); };
  for (int i : {1, 3, 5, 7}) {
    add(i, 1, i + 1, 0);
    add(i, 3, i + 1, 2);
    add(i, 1, i + 1, 2);
  }
  for (int i : {2, 4, 6}) {
    add(i, 0, i + 1, 1);
    add(i, 2, i + 1, 1);
    add(i, 2, i + 1, 3);
  }
  for (int y : {0, 2})
    for (int x : {2, 3, 6, 7}) add(x, y, x + 1, y);
  edges.push_back({om(c, -1, 1), om(c, 6, 0)});
  edges.push_back({om(c, -1, 1), om(c, 2, 1)});
  edges.push_back({om(c, -5, 0), om(c, 2, 1)});
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace greenp::testing
