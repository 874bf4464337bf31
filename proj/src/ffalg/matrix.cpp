#include "greenp/ffalg/matrix.hpp"

#include <algorithm>

namespace greenp::ffalg {

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape");
  const PrimeField& f = a.field();
  const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
  FpMatrix out(f, n, k);
  if (n == 0 || m == 0 || k == 0) return out;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, f.lazy_chunk());
  std::vector<std::uint64_t> acc(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const auto* arow = a.row_ptr(i);
    std::uint64_t pending = 0;
    for (std::size_t l = 0; l < m; ++l) {
      const std::uint64_t ail = arow[l];
      if (ail == 0) continue;
      const auto* brow = b.row_ptr(l);
      for (std::size_t j = 0; j < k; ++j) acc[j] += ail * brow[j];
      if (++pending == chunk) {
        for (auto& x : acc) x = f.reduce(x);
        pending = 0;
      }
    }
    auto* orow = out.row_ptr(i);
    for (std::size_t j = 0; j < k; ++j) orow[j] = f.reduce(acc[j]);
  }
  return out;
}

}  // namespace greenp::ffalg
