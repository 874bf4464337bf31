#include "greenp/oracle/decompose.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "greenp/error.hpp"
#include "greenp/ffalg/factor.hpp"
#include "greenp/ffalg/linalg.hpp"
#include "greenp/oracle/modules.hpp"

namespace greenp::oracle {
namespace {

using Rng = std::mt19937_64;

std::vector<MatRep> simples(const PrimeContext& ctx) {
  std::vector<MatRep> out;
  for (int t = 0; t <= ctx.p() - 2; ++t) out.push_back(simple_d(ctx, t));
  return out;
}

FpMatrix random_combination(const std::vector<FpMatrix>& basis, Rng& rng) {
  const PrimeField& f = basis.front().field();
  std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
  FpMatrix out(f, basis.front().rows(), basis.front().cols());
  for (const FpMatrix& b : basis) out.add_scaled(b, coef(rng));
  return out;
}

// Generalized kernels of the primary factors of theta's characteristic
// polynomial, or nothing when theta has a single primary component.
std::optional<std::vector<FpMatrix>> split_by(const FpMatrix& theta, Rng& rng) {
  const auto factors = ffalg::factor_gfq(ffalg::char_poly(theta), rng());
  if (factors.size() < 2) return std::nullopt;
  std::vector<FpMatrix> parts;
  for (const auto& fac : factors) {
    const FpMatrix fx = ffalg::evaluate(fac.poly, theta);
    parts.push_back(ffalg::kernel_basis(ffalg::power(fx, fac.multiplicity)));
  }
  return parts;
}

std::vector<MatRep> split_module(const MatRep& m, const std::vector<FpMatrix>& parts) {
  FpMatrix q(m.field(), m.degree(), 0);
  for (const FpMatrix& part : parts) q = ffalg::hstack(q, part);
  if (q.cols() != m.degree()) throw InternalError("primary components do not span");
  const FpMatrix q_inv = ffalg::inverse(q);
  const MatRep conj = conjugate(m, q, q_inv);
  std::vector<MatRep> out;
  std::size_t offset = 0;
  for (const FpMatrix& part : parts) {
    const std::size_t k = part.cols();
    const auto s = conj.gen_s().block(offset, offset, k, k);
    const auto t = conj.gen_t().block(offset, offset, k, k);
    out.emplace_back(m.context(), s, t);
    offset += k;
  }
  // The conjugated generators must be block diagonal.
  const MatRep rebuilt = [&] {
    MatRep acc = MatRep::zero(m.context());
    for (const MatRep& r : out) acc = direct_sum(acc, r);
    return acc;
  }();
  if (!(rebuilt.gen_s() == conj.gen_s()) || !(rebuilt.gen_t() == conj.gen_t()))
    throw InternalError("primary components are not submodules");
  return out;
}

enum class LocalCheck { Local, Splits, Unknown };

// End(M) is local iff J = span{E_k - lambda_k} acts nilpotently, where each
// basis element E_k has characteristic polynomial (x - lambda_k)^n.
LocalCheck certify_local(const std::vector<FpMatrix>& end_basis, Rng& rng,
                         std::optional<std::vector<FpMatrix>>& parts) {
  const PrimeField& f = end_basis.front().field();
  const std::size_t n = end_basis.front().rows();
  std::vector<FpMatrix> radical_gens;
  for (const FpMatrix& e : end_basis) {
    const auto factors = ffalg::factor_gfq(ffalg::char_poly(e), rng());
    if (factors.size() > 1) {
      parts = split_by(e, rng);
      return parts ? LocalCheck::Splits : LocalCheck::Unknown;
    }
    if (factors.front().poly.degree() != 1) return LocalCheck::Unknown;
    const auto lambda = f.neg(factors.front().poly.coeff(0));
    FpMatrix j = e;
    for (std::size_t d = 0; d < n; ++d) j(d, d) = f.sub(j(d, d), lambda);
    if (!j.is_zero()) radical_gens.push_back(std::move(j));
  }
  FpMatrix v = FpMatrix::identity(f, n);
  while (v.cols() > 0) {
    FpMatrix w(f, n, 0);
    for (const FpMatrix& j : radical_gens) w = ffalg::hstack(w, j * v);
    FpMatrix next = ffalg::column_space(w);
    if (next.cols() >= v.cols()) return LocalCheck::Unknown;
    v = std::move(next);
  }
  return LocalCheck::Local;
}

void decompose_rec(const MatRep& m, Rng& rng, std::vector<MatRep>& pieces,
                   std::vector<bool>& certified) {
  if (m.degree() == 0) return;
  auto emit = [&](bool ok) {
    pieces.push_back(m);
    certified.push_back(ok);
  };
  if (m.degree() == 1) return emit(true);
  const std::vector<FpMatrix> end = hom_space(SpinBasis(m, rng()), m);
  if (end.size() <= 1) return emit(true);
  auto recurse = [&](const std::vector<FpMatrix>& parts) {
    for (const MatRep& part : split_module(m, parts)) decompose_rec(part, rng, pieces, certified);
  };
  for (int round = 0; round < 8; ++round)
    if (auto parts = split_by(random_combination(end, rng), rng)) return recurse(*parts);
  std::optional<std::vector<FpMatrix>> parts;
  switch (certify_local(end, rng, parts)) {
    case LocalCheck::Local:
      return emit(true);
    case LocalCheck::Splits:
      return recurse(*parts);
    case LocalCheck::Unknown:
      break;
  }
  // Products of endomorphisms reach idempotent-like elements that sparse
  // combinations can miss.
  std::uniform_int_distribution<std::size_t> pick(0, end.size() - 1);
  for (int round = 0; round < 32; ++round) {
    const FpMatrix theta = end[pick(rng)] * random_combination(end, rng);
    if (auto more = split_by(theta, rng)) return recurse(*more);
  }
  emit(false);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

HeadSocle head_socle(const MatRep& m, std::uint64_t seed) {
  HeadSocle out;
  if (m.degree() == 0) return out;
  const SpinBasis sb(m, seed);
  const auto ds = simples(m.context());
  for (int t = 0; t < static_cast<int>(ds.size()); ++t) {
    const std::size_t h = hom_space(sb, ds[t]).size();
    const std::size_t s = hom_space(ds[t], m, splitmix(seed + t)).size();
    // dim Hom(M, D_t) counts copies of D_t in the head since End(D_t) = F.
    out.head.insert(out.head.end(), h, t);
    out.socle.insert(out.socle.end(), s, t);
  }
  return out;
}

IdTable::IdTable(const PrimeContext& ctx) {
  for (const CensusEntry& e : census(ctx)) {
    const auto key = std::make_tuple(static_cast<std::size_t>(e.dim), e.head, e.socle);
    if (!table_.emplace(key, e.label).second)
      throw InternalError("census entries share dimension, head and socle");
  }
}

ModuleLabel IdTable::identify(std::size_t dim, const HeadSocle& hs) const {
  if (hs.head.empty() && hs.socle.empty()) return ModuleLabel::non_principal(static_cast<int>(dim));
  const auto it = table_.find(std::make_tuple(dim, hs.head, hs.socle));
  if (it == table_.end()) return ModuleLabel::unidentified(static_cast<int>(dim));
  return it->second;
}

std::vector<std::pair<ModuleLabel, int>> DecompositionReport::counts() const {
  std::map<ModuleLabel, int> tally;
  for (const Summand& s : summands) ++tally[s.label];
  return {tally.begin(), tally.end()};
}

StableElement DecompositionReport::stable_part(const PrimeContext& ctx) const {
  StableElement e(ctx);
  for (const Summand& s : summands)
    if (s.label.kind == ModuleLabel::Kind::Stable) e.add(s.label.cls, 1);
  return e;
}

std::size_t DecompositionReport::total_degree() const {
  std::size_t d = 0;
  for (const Summand& s : summands) d += s.rep.degree();
  return d;
}

DecompositionReport fitting_decompose(const MatRep& m, std::uint64_t seed,
                                      const OracleConfig& cfg) {
  if (m.context().p() > cfg.max_decompose_prime)
    throw ResourceError("decomposition is limited to p <= " +
                        std::to_string(cfg.max_decompose_prime));
  Rng rng(seed);
  std::vector<MatRep> pieces;
  std::vector<bool> certified;
  decompose_rec(m, rng, pieces, certified);
  const IdTable table(m.context());
  DecompositionReport report;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    ModuleLabel label = ModuleLabel::unidentified(static_cast<int>(pieces[k].degree()));
    if (certified[k])
      label = table.identify(pieces[k].degree(), head_socle(pieces[k], rng()));
    if (label.kind == ModuleLabel::Kind::Unidentified) report.residual = true;
    report.summands.push_back({label, pieces[k]});
  }
  std::stable_sort(report.summands.begin(), report.summands.end(),
                   [](const Summand& a, const Summand& b) { return a.label < b.label; });
  return report;
}

StrippedModule stable_strip(const MatRep& m, std::uint64_t seed, const OracleConfig& cfg) {
  const DecompositionReport rep = fitting_decompose(m, seed, cfg);
  StrippedModule out{MatRep::zero(m.context()), {}, rep.residual};
  for (const Summand& s : rep.summands) {
    if (s.label.is_projective())
      ++out.projectives[s.label];
    else
      out.core = direct_sum(out.core, s.rep);
  }
  return out;
}

MatRep omega_rep(const MatRep& m, std::uint64_t seed) {
  const PrimeContext& ctx = m.context();
  const PrimeField& f = m.field();
  const std::size_t n = m.degree();
  if (n == 0) return m;
  const SpinBasis sb(m, seed);
  const auto ds = simples(ctx);

  // Rad(M): common kernel of all maps to simples.
  FpMatrix to_head(f, 0, n);
  for (const MatRep& d : ds)
    for (const FpMatrix& phi : hom_space(sb, d)) to_head = ffalg::vstack(to_head, phi);
  FpMatrix covered = ffalg::kernel_basis(to_head);

  MatRep cover = MatRep::zero(ctx);
  FpMatrix pi(f, n, 0);
  for (int t = 0; t <= ctx.p() - 2 && covered.cols() < n; ++t) {
    const MatRep pt = signed_young_module(ctx, t);
    for (const FpMatrix& phi : hom_space(pt, m, splitmix(seed ^ (t + 1)))) {
      FpMatrix grown = ffalg::column_space(ffalg::hstack(covered, phi));
      if (grown.cols() == covered.cols()) continue;
      covered = std::move(grown);
      cover = direct_sum(cover, pt);
      pi = ffalg::hstack(pi, phi);
      if (covered.cols() == n) break;
    }
  }
  if (ffalg::rank(pi) != n) throw InternalError("projective cover map is not surjective");
  return restrict_to(cover, ffalg::kernel_basis(pi));
}

JordanType restriction_jordan(const MatRep& m) {
  const std::size_t n = m.degree();
  const int p = m.context().p();
  if (n == 0) return {};
  FpMatrix nil = m.gen_t();
  const PrimeField& f = m.field();
  for (std::size_t d = 0; d < n; ++d) nil(d, d) = f.sub(nil(d, d), 1);
  // ranks[k] = rank of (t - 1)^k.
  std::vector<long> ranks{static_cast<long>(n)};
  FpMatrix acc = FpMatrix::identity(f, n);
  for (int k = 1; k <= p + 1; ++k) {
    acc = acc * nil;
    ranks.push_back(static_cast<long>(ffalg::rank(acc)));
  }
  if (ranks[p] != 0) throw InternalError("p-cycle does not act unipotently");
  std::vector<int> blocks;
  for (int k = 1; k <= p; ++k) {
    const long count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    blocks.insert(blocks.end(), count, k);
  }
  return make_jordan_type(std::move(blocks));
}

std::size_t coredim(const MatRep& m, int n, std::uint64_t seed, const OracleConfig& cfg) {
  if (n < 1) throw DomainError("tensor power must be positive");
  if (n > cfg.max_tensor_power || m.context().p() > cfg.max_power_prime)
    throw ResourceError("coredim is limited to n <= " + std::to_string(cfg.max_tensor_power) +
                        " and p <= " + std::to_string(cfg.max_power_prime));
  // Projective summands stay projective under tensoring, so stripping after
  // every factor gives the same core.
  StrippedModule s = stable_strip(m, splitmix(seed), cfg);
  for (int k = 2; k <= n; ++k)
    s = stable_strip(tensor_rep(s.core, m), splitmix(seed + k), cfg);
  if (s.residual) throw InternalError("core of tensor power not identified");
  return s.core.degree();
}

bool is_isomorphic(const MatRep& a, const MatRep& b, std::uint64_t seed) {
  if (a.degree() != b.degree()) return false;
  if (a.degree() == 0) return true;
  const std::vector<FpMatrix> homs = hom_space(a, b, seed);
  if (homs.empty()) return false;
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt)
    if (ffalg::rank(random_combination(homs, rng)) == a.degree()) return true;
  return false;
}

}  // namespace greenp::oracle
