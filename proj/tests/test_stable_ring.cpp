#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "greenp/error.hpp"
#include "greenp/stable_ring.hpp"
#include "support.hpp"

using namespace greenp;
using greenp::testing::odd_primes_upto;

namespace {

StableElement cls(const PrimeContext& ctx, int shift, int j, std::int64_t m = 1) {
  return StableElement::basis(ctx, canonicalize(ctx, shift, j), m);
}

StableElement random_element(const PrimeContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, ctx.p() - 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> len(0, 5);
  StableElement e(ctx);
  for (int k = len(rng); k > 0; --k) e.add({idx(rng), idx(rng)}, coef(rng));
  return e;
}

}  // namespace

TEST(Canonicalize, Examples) {
  const PrimeContext ctx(5);
  EXPECT_EQ(canonicalize(ctx, 4, 0), (StableClass{0, 3}));
  EXPECT_EQ(canonicalize(ctx, 8, 1), (StableClass{0, 1}));
  EXPECT_EQ(canonicalize(ctx, -4, 1), (StableClass{0, 2}));
  EXPECT_EQ(canonicalize(ctx, -1, 0), (StableClass{3, 3}));
  EXPECT_THROW(canonicalize(ctx, 0, 4), DomainError);
  EXPECT_THROW(check_canonical(ctx, {4, 0}), DomainError);
}

TEST(Canonicalize, HugeShifts) {
  const PrimeContext ctx(7);
  EXPECT_EQ(canonicalize(ctx, INT64_MAX, 0), canonicalize(ctx, INT64_MAX % 12, 0));
  EXPECT_EQ(canonicalize(ctx, INT64_MIN, 2), canonicalize(ctx, (INT64_MIN % 12) + 12, 2));
}

TEST(Tensor, Examples) {
  const PrimeContext ctx(5);
  EXPECT_EQ(tensor(cls(ctx, 0, 1), cls(ctx, 0, 1)), cls(ctx, 0, 0) + cls(ctx, 0, 2));
  EXPECT_EQ(tensor(cls(ctx, 1, 1), cls(ctx, -1, 1)), cls(ctx, 0, 0) + cls(ctx, 0, 2));
  const StableElement x = cls(ctx, 3, 2) + 2 * cls(ctx, 1, 0);
  EXPECT_EQ(tensor(StableElement::unit(ctx), x), x);
}

TEST(Tensor, MismatchedPrime) {
  EXPECT_THROW(tensor(StableElement::unit(PrimeContext(5)), StableElement::unit(PrimeContext(7))),
               DomainError);
}

TEST(Tensor, ShiftsAdd) {
  const PrimeContext ctx(7);
  // O^2(D1) (x) O^3(D2) = sum over R(1,2) = {1, 3} of O^5(D_t).
  EXPECT_EQ(tensor(cls(ctx, 2, 1), cls(ctx, 3, 2)), cls(ctx, 5, 1) + cls(ctx, 5, 3));
}

TEST(Syzygy, Examples) {
  const PrimeContext ctx(5);
  EXPECT_EQ(syzygy(cls(ctx, 0, 0), 1), cls(ctx, 1, 0));
  EXPECT_EQ(syzygy(cls(ctx, 0, 1), 4), cls(ctx, 0, 2));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(syzygy(cls(ctx, i, j), 8), cls(ctx, i, j));
}

TEST(Syzygy, MinimalPeriod) {
  for (int p : odd_primes_upto(23)) {
    const PrimeContext ctx(p);
    for (int i = 0; i <= p - 2; ++i)
      for (int j = 0; j <= p - 2; ++j) {
        const StableElement x = cls(ctx, i, j);
        ASSERT_EQ(syzygy(x, ctx.period()), x);
        for (int n = 1; n < ctx.period(); ++n) ASSERT_NE(syzygy(x, n), x) << p << " " << n;
      }
  }
}

TEST(Dual, Examples) {
  const PrimeContext ctx(5);
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(dual(cls(ctx, 0, j)), cls(ctx, 0, j));
  EXPECT_EQ(dual(cls(ctx, 1, 0)), cls(ctx, 3, 3));
}

TEST(Dual, InvolutionOnRandomElements) {
  auto rng = greenp::testing::rng(1);
  for (int p : {3, 5, 7, 11}) {
    const PrimeContext ctx(p);
    for (int k = 0; k < 100; ++k) {
      const StableElement e = random_element(ctx, rng);
      ASSERT_EQ(dual(dual(e)), e);
    }
  }
}

TEST(Dual, TensorWithDualContainsUnit) {
  for (int p : odd_primes_upto(23)) {
    const PrimeContext ctx(p);
    for (int i = 0; i <= p - 2; ++i)
      for (int j = 0; j <= p - 2; ++j) {
        const StableElement x = cls(ctx, i, j);
        ASSERT_GE(tensor(x, dual(x)).coeff({0, 0}), 1);
      }
  }
}

TEST(Ring, CommutativeAndUnital) {
  for (int p : odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    const StableElement one = StableElement::unit(ctx);
    for (int i = 0; i <= p - 2; ++i)
      for (int j = 0; j <= p - 2; ++j) {
        const StableElement x = cls(ctx, i, j);
        ASSERT_EQ(tensor(one, x), x);
        ASSERT_EQ(tensor(x, one), x);
        for (int k = 0; k <= p - 2; ++k) {
          const StableElement y = cls(ctx, k, (j + k) % (p - 1));
          ASSERT_EQ(tensor(x, y), tensor(y, x));
        }
      }
  }
}

TEST(Ring, Associative) {
  for (int p : odd_primes_upto(23)) {
    const PrimeContext ctx(p);
    const int n = p - 1;
    // Shifts only add, so associativity reduces to the R-set identity.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          std::map<int, int> left, right;
          for (int t : r_set(ctx, i, j))
            for (int s : r_set(ctx, t, k)) ++left[s];
          for (int t : r_set(ctx, j, k))
            for (int s : r_set(ctx, i, t)) ++right[s];
          ASSERT_EQ(left, right) << p << " " << i << " " << j << " " << k;
        }
    const StableElement a = cls(ctx, 1, 1), b = cls(ctx, 2, n - 2), c = cls(ctx, -3, n / 2);
    ASSERT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  }
}

TEST(Ring, Arithmetic) {
  const PrimeContext ctx(5);
  StableElement e = cls(ctx, 0, 1) - cls(ctx, 0, 1);
  EXPECT_TRUE(e.is_zero());
  e = 3 * cls(ctx, 1, 1) - cls(ctx, 2, 0);
  EXPECT_EQ(e.coeff({1, 1}), 3);
  EXPECT_EQ(e.coeff({2, 0}), -1);
  EXPECT_FALSE(e.is_genuine());
  EXPECT_THROW(2 * StableElement::basis(ctx, {0, 0}, INT64_MAX), ResourceError);
}

TEST(Loewy, Examples) {
  const PrimeContext ctx(5);
  const LoewyPair simple = loewy(ctx, {0, 2});
  EXPECT_TRUE(simple.simple);
  EXPECT_EQ(simple.head, std::vector<int>{2});
  EXPECT_EQ(simple.socle, std::vector<int>{2});
  const LoewyPair o1 = loewy(ctx, {1, 0});
  EXPECT_FALSE(o1.simple);
  EXPECT_EQ(o1.head, std::vector<int>{1});
  EXPECT_EQ(o1.socle, std::vector<int>{0});
  const LoewyPair o2 = loewy(ctx, {2, 1});
  EXPECT_EQ(o2.head, (std::vector<int>{1, 3}));
  EXPECT_EQ(o2.socle, (std::vector<int>{0, 2}));
}

TEST(Loewy, LayersChainAndAreMultiplicityFree) {
  for (int p : odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    for (int j = 0; j <= p - 2; ++j)
      for (int i = 0; i <= p - 2; ++i) {
        const LoewyPair lp = loewy(ctx, {i, j});
        ASSERT_EQ(std::set<int>(lp.head.begin(), lp.head.end()).size(), lp.head.size());
        if (i + 1 <= p - 2) {
          ASSERT_EQ(loewy(ctx, {i + 1, j}).socle, lp.head);
        }
      }
  }
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(dim_simple(PrimeContext(5), 0), 1);
  EXPECT_EQ(dim_simple(PrimeContext(5), 1), 3);
  EXPECT_EQ(dim_simple(PrimeContext(7), 3), 10);
  EXPECT_EQ(dim_projective(PrimeContext(5), 0), 5);
  EXPECT_EQ(dim_projective(PrimeContext(3), 0), 3);
  EXPECT_EQ(dim_class(PrimeContext(5), {1, 0}), 4);
  EXPECT_EQ(dim_simple(PrimeContext(101), 49).str(), "50445672272782096667406248628");
}

TEST(Dimensions, SpechtDimensionsSplit) {
  // dim S_i = C(p-1, i) with S_i ~ D_{i-1} + D_i.
  for (int p : odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    BigInt binom = 1;
    for (int i = 0; i <= p - 1; ++i) {
      BigInt sum = 0;
      for (int t : s_factors(ctx, i)) sum += dim_simple(ctx, t);
      ASSERT_EQ(sum, binom);
      binom = binom * (p - 1 - i) / (i + 1);
    }
  }
}

TEST(Dimensions, ProjectivesDivisibleByP) {
  for (int p : odd_primes_upto(97)) {
    const PrimeContext ctx(p);
    for (int t = 0; t <= p - 2; ++t) ASSERT_EQ(dim_projective(ctx, t) % p, 0);
  }
}

TEST(Dimensions, TensorCongruence) {
  for (int p : odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    for (int i = 0; i <= p - 2; ++i)
      for (int j = 0; j <= p - 2; ++j)
        for (int s : {0, 1, p - 2}) {
          const StableElement x = cls(ctx, s, i), y = cls(ctx, 1, j);
          const BigInt lhs = dim_element(tensor(x, y)) - dim_element(x) * dim_element(y);
          ASSERT_EQ(lhs % p, 0);
        }
  }
}

TEST(Resolution, Examples) {
  const PrimeContext ctx(5);
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(min_resolution_term(ctx, {0, j}, 0), std::vector<int>{j});
  EXPECT_EQ(min_resolution_term(ctx, {0, 1}, 1), (std::vector<int>{0, 2}));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      EXPECT_EQ(min_resolution_term(ctx, {i, j}, 8), min_resolution_term(ctx, {i, j}, 0));
  EXPECT_THROW(min_resolution_term(ctx, {0, 0}, -1), DomainError);
}

TEST(ExtDim, Examples) {
  const PrimeContext ctx(5);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      EXPECT_EQ(ext_dim(ctx, 0, SimpleLabel::hook(i), SimpleLabel::hook(j)), i == j ? 1 : 0);
      EXPECT_EQ(ext_dim(ctx, 1, SimpleLabel::hook(i), SimpleLabel::hook(j)),
                std::abs(i - j) == 1 ? 1 : 0);
      EXPECT_EQ(ext_dim(ctx, 8, SimpleLabel::hook(i), SimpleLabel::hook(j)), i == j ? 1 : 0);
    }
  EXPECT_EQ(ext_dim(ctx, 0, SimpleLabel::non_principal(0), SimpleLabel::non_principal(0)), 1);
  EXPECT_EQ(ext_dim(ctx, 1, SimpleLabel::non_principal(0), SimpleLabel::hook(0)), 0);
  EXPECT_EQ(ext_dim(ctx, 2, SimpleLabel::hook(0), SimpleLabel::non_principal(1)), 0);
}

TEST(Census, CountsAndKeys) {
  for (int p : {3, 5, 7, 11}) {
    const PrimeContext ctx(p);
    const auto entries = census(ctx);
    EXPECT_EQ(entries.size(), static_cast<std::size_t>(p * (p - 1)));
    if (p > 7) continue;
    std::set<std::tuple<std::string, std::vector<int>, std::vector<int>>> keys;
    for (const CensusEntry& e : entries) keys.insert({e.dim.str(), e.head, e.socle});
    EXPECT_EQ(keys.size(), entries.size()) << "p = " << p;
  }
}

TEST(Labels, Rendering) {
  EXPECT_EQ(to_string(StableClass{0, 2}), "D2");
  EXPECT_EQ(to_string(StableClass{3, 1}), "O^3(D1)");
  EXPECT_EQ(to_string(ModuleLabel::projective(4)), "P4");
  EXPECT_EQ(to_string(ModuleLabel::non_principal(14)), "X[14]");
  EXPECT_EQ(to_string(ModuleLabel::unidentified(6)), "?[6]");
}
