#include <gtest/gtest.h>

#include "greenp/error.hpp"
#include "greenp/ffalg/linalg.hpp"
#include "greenp/oracle/decompose.hpp"
#include "greenp/oracle/modules.hpp"
#include "greenp/oracle/verify.hpp"

using namespace greenp;
using namespace greenp::oracle;
using greenp::ffalg::FpMatrix;

namespace {

// dim Hom(A, B) straight from the linear system X a(g) - b(g) X = 0 in the
// n*m entries of X, without spinning.
std::size_t hom_dim_direct(const MatRep& a, const MatRep& b) {
  const auto& f = a.field();
  const std::size_t n = a.degree(), m = b.degree();
  FpMatrix sys(f, 2 * n * m, n * m);
  std::size_t row0 = 0;
  for (int g = 0; g < 2; ++g, row0 += n * m) {
    const FpMatrix& ag = *a.gens()[g];
    const FpMatrix& bg = *b.gens()[g];
    // Entry (r, c) of X a - b X; unknown X(i, k) sits at column i * n + k.
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = row0 + r * n + c;
        for (std::size_t k = 0; k < n; ++k)
          sys(row, r * n + k) = f.add(sys(row, r * n + k), ag(k, c));
        for (std::size_t i = 0; i < m; ++i)
          sys(row, i * n + c) = f.sub(sys(row, i * n + c), bg(r, i));
      }
  }
  return n * m - ffalg::rank(sys);
}

std::vector<MatRep> small_modules(const PrimeContext& ctx) {
  std::vector<MatRep> out = {trivial_module(ctx), perm_module(ctx), specht_s1(ctx)};
  for (int j = 0; j <= ctx.p() - 2; ++j) out.push_back(simple_d(ctx, j));
  out.push_back(signed_young_module(ctx, 1));
  out.push_back(dual(specht_s1(ctx)));
  return out;
}

}  // namespace

TEST(Modules, RelationsHold) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (const MatRep& m : small_modules(ctx)) EXPECT_TRUE(m.satisfies_relations()) << p << " " << m.degree();
    for (int i = 0; i <= p - 1; ++i) EXPECT_TRUE(specht_module(ctx, i).satisfies_relations());
    for (int t = 0; t <= p - 2; ++t) EXPECT_TRUE(signed_young_module(ctx, t).satisfies_relations());
  }
}

TEST(Modules, BrokenRelationsDetected) {
  const PrimeContext ctx(5);
  const MatRep perm = perm_module(ctx);
  // A 5-cycle squared is still a 5-cycle, but s t^2 breaks (st)^4 = 1.
  const MatRep bad(ctx, perm.gen_s(), ffalg::multiply(perm.gen_t(), perm.gen_t()));
  EXPECT_FALSE(bad.satisfies_relations());
  EXPECT_THROW(MatRep(ctx, perm.gen_s(), FpMatrix(perm.field(), 5, 4)), DomainError);
}

TEST(Modules, Dimensions) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int j = 0; j <= p - 2; ++j) {
      EXPECT_EQ(BigInt(simple_d(ctx, j).degree()), dim_simple(ctx, j));
      EXPECT_EQ(BigInt(signed_young_module(ctx, j).degree()), dim_projective(ctx, j));
    }
  }
  EXPECT_EQ(colex_subsets(4, 2).size(), 6u);
  EXPECT_EQ(colex_subsets(4, 2)[1], (std::vector<int>{0, 2}));
}

TEST(Hom, SpinningAgreesWithDirectSystem) {
  for (int p : {3, 5}) {
    const PrimeContext ctx(p);
    const auto mods = small_modules(ctx);
    for (const MatRep& a : mods)
      for (const MatRep& b : mods) {
        const auto basis = hom_space(a, b);
        ASSERT_EQ(basis.size(), hom_dim_direct(a, b)) << p << " " << a.degree() << " " << b.degree();
        for (const FpMatrix& x : basis) ASSERT_TRUE(is_homomorphism(a, b, x));
      }
  }
}

TEST(Hom, SchurAndSelfDuality) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int i = 0; i <= p - 2; ++i) {
      const MatRep di = simple_d(ctx, i);
      EXPECT_TRUE(is_isomorphic(di, dual(di)));
      for (int j = 0; j <= p - 2; ++j) EXPECT_EQ(hom_dim(di, simple_d(ctx, j)), i == j ? 1u : 0u);
    }
  }
}

TEST(Identify, ProjectivesAndSimples) {
  const PrimeContext ctx(5);
  const IdTable table(ctx);
  for (int t = 0; t <= 3; ++t) {
    const MatRep pt = signed_young_module(ctx, t);
    const HeadSocle hs = head_socle(pt);
    EXPECT_EQ(hs.head, std::vector<int>{t});
    EXPECT_EQ(hs.socle, std::vector<int>{t});
    EXPECT_EQ(table.identify(pt.degree(), hs), ModuleLabel::projective(t));
    const MatRep dt = simple_d(ctx, t);
    EXPECT_EQ(table.identify(dt.degree(), head_socle(dt)), ModuleLabel::stable({0, t}));
  }
  EXPECT_EQ(table.identify(5, {}), ModuleLabel::non_principal(5));
}

TEST(Decompose, TensorSquareOfD1AtP5) {
  const PrimeContext ctx(5);
  const MatRep d1 = simple_d(ctx, 1);
  const DecompositionReport r = fitting_decompose(tensor_rep(d1, d1), 7);
  EXPECT_FALSE(r.residual);
  EXPECT_EQ(r.total_degree(), 9u);
  const StableElement expected = StableElement::basis(ctx, {0, 0}) + StableElement::basis(ctx, {0, 2});
  EXPECT_EQ(r.stable_part(ctx), expected);
  const auto counts = r.counts();
  EXPECT_NE(std::find(counts.begin(), counts.end(), std::pair{ModuleLabel::non_principal(5), 1}), counts.end());
}

TEST(Decompose, DirectSumSplitsBack) {
  const PrimeContext ctx(5);
  const MatRep m = direct_sum(direct_sum(simple_d(ctx, 2), omega_rep(simple_d(ctx, 0))), signed_young_module(ctx, 1));
  const DecompositionReport r = fitting_decompose(m, 3);
  ASSERT_FALSE(r.residual);
  const std::vector<std::pair<ModuleLabel, int>> expected = {
      {ModuleLabel::stable({0, 2}), 1}, {ModuleLabel::stable({1, 0}), 1}, {ModuleLabel::projective(1), 1}};
  auto got = r.counts();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Decompose, SyzygiesMatchLoewy) {
  const PrimeContext ctx(5);
  for (int j = 0; j <= 3; ++j) {
    MatRep m = simple_d(ctx, j);
    for (int i = 1; i <= 4; ++i) {
      m = omega_rep(m);
      const StableClass c = canonicalize(ctx, i, j);
      const HeadSocle hs = head_socle(m);
      const LoewyPair lp = loewy(ctx, c);
      ASSERT_EQ(BigInt(m.degree()), dim_class(ctx, c)) << i << " " << j;
      ASSERT_EQ(hs.head, lp.head) << i << " " << j;
      ASSERT_EQ(hs.socle, lp.socle) << i << " " << j;
    }
  }
}

TEST(Decompose, RestrictionJordanTypes) {
  const PrimeContext ctx(7);
  EXPECT_EQ(restriction_jordan(simple_d(ctx, 2)).blocks, (std::vector<int>{3, 7}));
  EXPECT_EQ(restriction_jordan(signed_young_module(ctx, 0)).blocks, std::vector<int>{7});
  for (int j = 0; j <= 5; ++j) {
    const JordanType t = restriction_jordan(simple_d(ctx, j));
    std::vector<int> stable;
    for (int b : t.blocks)
      if (b != 7) stable.push_back(b);
    EXPECT_EQ(stable, restriction_jordan_stable(ctx, j).blocks) << j;
  }
}

TEST(Decompose, CoreDimensions) {
  const PrimeContext ctx(5);
  const std::vector<std::size_t> expected = {3, 4, 7};
  for (int j : {1, 2})
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(coredim(simple_d(ctx, j), n, 11), expected[n - 1]) << j << " " << n;
  EXPECT_THROW(coredim(simple_d(ctx, 1), 5, 11), ResourceError);
  EXPECT_THROW(coredim(simple_d(PrimeContext(7), 1), 2, 11), ResourceError);
}

TEST(Verify, SmallPrimePassesAndIsDeterministic) {
  const PrimeContext ctx(3);
  VerifyOptions opts;
  opts.max_tensor_power = 2;
  const auto a = run_verification(ctx, opts);
  ASSERT_FALSE(a.empty());
  for (const CheckRecord& r : a) EXPECT_TRUE(r.pass) << to_json(r).dump();
  opts.jobs = 3;
  const auto b = run_verification(ctx, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(to_json(a[k]), to_json(b[k]));
  EXPECT_NE(task_seed(1, 0), task_seed(1, 1));
  EXPECT_NE(task_seed(1, 0), task_seed(2, 0));
}

TEST(Verify, RefusesLargePrimes) {
  EXPECT_THROW(run_verification(PrimeContext(11), VerifyOptions{}), ResourceError);
}
