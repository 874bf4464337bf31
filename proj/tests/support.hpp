#pragma once

// Helpers shared by the test binaries: small primes, a seeded generator,
// and an R-set computed straight from the rectangle's geometry.

#include <cstdint>
#include <random>
#include <vector>

#include "greenp/diagram.hpp"

namespace greenp::testing {

inline std::vector<int> odd_primes_upto(int n) {
  std::vector<int> out;
  for (int p = 3; p <= n; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Grid points b of layer i lying in the j-rectangle and on its lattice:
// j <= i + b <= 2p - 4 - j, |b - i| <= j, i + b = j (mod 2).
inline std::vector<int> geometric_rset(int p, int i, int j) {
  std::vector<int> out;
  for (int b = 0; b <= p - 2; ++b) {
    const int sum = i + b, diff = b - i;
    if (sum < j || sum > 2 * p - 4 - j) continue;
    if (diff < -j || diff > j) continue;
    if ((sum - j) % 2 != 0) continue;
    out.push_back(b);
  }
  return out;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0xC0FFEE + salt); }

}  // namespace greenp::testing
