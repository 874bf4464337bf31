#include "greenp/ffalg/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "greenp/error.hpp"

namespace greenp::ffalg {
namespace {

// g with g(x)^q = f(x); requires f' = 0.
FpPoly qth_root(const FpPoly& f) {
  const PrimeField& fld = f.field();
  const std::size_t q = fld.modulus();
  std::vector<PrimeField::Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += q) c.push_back(f.coeffs()[i]);
  return FpPoly(fld, std::move(c));
}

void squarefree_rec(const FpPoly& f, int scale, std::vector<FpFactor>& out) {
  if (f.degree() <= 0) return;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = (w / y).monic();
    if (fac.degree() > 0) out.push_back({fac, i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const int q = static_cast<int>(f.field().modulus());
    squarefree_rec(qth_root(c.monic()), scale * q, out);
  }
}

FpPoly random_poly(const PrimeField& fld, long below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, fld.modulus() - 1);
  std::vector<PrimeField::Elem> c(static_cast<std::size_t>(below_degree));
  for (auto& a : c) a = dist(rng);
  return FpPoly(fld, std::move(c));
}

bool factor_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                      b.coeffs().rbegin(), b.coeffs().rend());
}

}  // namespace

std::vector<FpFactor> squarefree_decomposition(const FpPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of 0");
  std::vector<FpFactor> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<QFactor> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of 0");
  std::vector<QFactor> out;
  const QPoly g = f.monic();
  if (g.degree() <= 0) return out;
  // Yun's algorithm.
  QPoly a = gcd(g, g.derivative());
  QPoly b = g / a;
  QPoly c = g.derivative() / a;
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly h = gcd(b, d);
    if (h.degree() > 0) out.push_back({h, i});
    b = b / h;
    c = d / h;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f) {
  const PrimeField& fld = f.field();
  const FpPoly x = FpPoly::x(fld);
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = f.monic();
  FpPoly h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, fld.modulus(), rest);
    FpPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<int>(rest.degree()));
  return out;
}

std::vector<FpPoly> equal_degree(const FpPoly& f, int d, std::uint64_t seed) {
  const PrimeField& fld = f.field();
  const std::uint32_t q = fld.modulus();
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> done;
  std::vector<FpPoly> todo{f.monic()};
  while (!todo.empty()) {
    FpPoly g = todo.back();
    todo.pop_back();
    if (g.degree() == d) {
      done.push_back(g);
      continue;
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw InternalError("equal-degree splitting stalled");
      const FpPoly a = random_poly(fld, g.degree(), rng);
      if (a.degree() <= 0) continue;
      FpPoly s(fld);
      if (q == 2) {
        // Absolute trace a + a^2 + ... + a^{2^{d-1}}.
        FpPoly term = a;
        s = a;
        for (int k = 1; k < d; ++k) {
          term = (term * term) % g;
          s += term;
        }
      } else {
        // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
        FpPoly norm = a;
        FpPoly conj = a;
        for (int k = 1; k < d; ++k) {
          conj = powmod(conj, q, g);
          norm = (norm * conj) % g;
        }
        s = powmod(norm, (q - 1) / 2, g) - FpPoly::constant(fld, 1);
      }
      FpPoly split = gcd(g, s);
      if (split.degree() > 0 && split.degree() < g.degree()) {
        todo.push_back(split);
        todo.push_back((g / split).monic());
        break;
      }
    }
  }
  return done;
}

std::vector<FpPoly> factor_squarefree_gfq(const FpPoly& f, std::uint64_t seed) {
  std::vector<FpPoly> out;
  std::uint64_t round = 0;
  for (const auto& [g, d] : distinct_degree(f)) {
    for (FpPoly& h : equal_degree(g, d, seed + 0x9E3779B97F4A7C15ULL * ++round))
      out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<FpFactor> factor_gfq(const FpPoly& f, std::uint64_t seed) {
  std::vector<FpFactor> out;
  for (const FpFactor& sf : squarefree_decomposition(f))
    for (FpPoly& g : factor_squarefree_gfq(sf.poly, seed))
      out.push_back({std::move(g), sf.multiplicity});
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (!(a.poly == b.poly)) return factor_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace greenp::ffalg
