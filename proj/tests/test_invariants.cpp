#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "greenp/invariants.hpp"
#include "support.hpp"

using namespace greenp;

namespace {

double chebyshev(int p, int k) { return std::sin(k * std::numbers::pi / p) / std::sin(std::numbers::pi / p); }

}  // namespace

TEST(Gamma, CyclicValues) {
  const PrimeContext ctx(5);
  EXPECT_DOUBLE_EQ(gamma_cp(ctx, 1).value(), 1.0);
  EXPECT_NEAR(gamma_cp(ctx, 2).value(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(gamma_cp(ctx, 3).value(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_DOUBLE_EQ(gamma_cp(ctx, 4).value(), 1.0);
  EXPECT_THROW(gamma_cp(ctx, 5), ProjectiveBlockError);
  EXPECT_THROW(gamma_cp(ctx, 0), DomainError);
  EXPECT_THROW(gamma_cp(ctx, 6), DomainError);
}

TEST(Gamma, SymmetricUnderComplement) {
  for (int p : greenp::testing::odd_primes_upto(97)) {
    const PrimeContext ctx(p);
    for (int k = 1; k <= p - 1; ++k) {
      const GammaValue a = gamma_cp(ctx, k), b = gamma_cp(ctx, p - k);
      ASSERT_EQ(a.value(), b.value());
      ASSERT_TRUE(a.equivalent(b));
      ASSERT_NEAR(a.value(), chebyshev(p, k), 1e-12 * p);
      ASSERT_GE(a.value(), 1.0 - 1e-12);
    }
  }
}

TEST(Gamma, ClassValuesIgnoreShift) {
  const PrimeContext ctx(7);
  for (int j = 0; j <= 5; ++j) {
    const double v = gamma_class(ctx, {0, j}).value();
    EXPECT_NEAR(v, chebyshev(7, j + 1), 1e-12);
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(gamma_class(ctx, {i, j}).value(), v);
    EXPECT_EQ(gamma_sign_note({0, j}), j % 2 == 1);
  }
}

TEST(Gamma, MatchesRestrictionJordanType) {
  for (int p : greenp::testing::odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    for (int j = 0; j <= p - 2; ++j)
      ASSERT_EQ(gamma_jordan(ctx, restriction_jordan_stable(ctx, j)), gamma_class(ctx, {0, j}).value());
  }
}

TEST(Gamma, Multiplicative) {
  for (int p : greenp::testing::odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    for (int i = 0; i <= p - 2; ++i)
      for (int j = 0; j <= p - 2; ++j) {
        const StableElement x = StableElement::basis(ctx, {i % (p - 1), i});
        const StableElement y = StableElement::basis(ctx, {0, j});
        const double lhs = gamma_element(tensor(x, y));
        const double rhs = gamma_element(x) * gamma_element(y);
        ASSERT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, rhs)) << p << " " << i << " " << j;
      }
  }
}

TEST(Gamma, AdditiveAndRejectsVirtual) {
  const PrimeContext ctx(5);
  const StableElement x = 2 * StableElement::basis(ctx, {0, 1}) + StableElement::basis(ctx, {1, 0});
  EXPECT_NEAR(gamma_element(x), 2 * gamma_class(ctx, {0, 1}).value() + 1.0, 1e-12);
  EXPECT_EQ(gamma_element(StableElement(ctx)), 0.0);
  EXPECT_THROW(gamma_element(StableElement::basis(ctx, {0, 0}, -1)), DomainError);
  EXPECT_EQ(gamma_projective(), 0.0);
}

TEST(Jordan, StableRestriction) {
  const PrimeContext ctx(7);
  EXPECT_EQ(restriction_jordan_stable(ctx, 0).blocks, std::vector<int>{1});
  EXPECT_EQ(restriction_jordan_stable(ctx, 1).blocks, std::vector<int>{5});
  EXPECT_EQ(restriction_jordan_stable(ctx, 2).blocks, std::vector<int>{3});
  EXPECT_EQ(restriction_jordan_stable(ctx, 5).blocks, std::vector<int>{1});
  EXPECT_THROW(restriction_jordan_stable(ctx, 6), DomainError);
}

TEST(Jordan, DimensionAccounting) {
  // dim D_j minus the stable block is a multiple of p (the free part).
  for (int p : greenp::testing::odd_primes_upto(47)) {
    const PrimeContext ctx(p);
    for (int j = 0; j <= p - 2; ++j) {
      const BigInt rest = dim_simple(ctx, j) - restriction_jordan_stable(ctx, j).total();
      ASSERT_EQ(rest % p, 0) << p << " " << j;
    }
  }
}

TEST(Jordan, Construction) {
  const JordanType t = make_jordan_type({5, 1, 3});
  EXPECT_EQ(t.blocks, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(t.total(), 9);
  EXPECT_NEAR(gamma_jordan(PrimeContext(5), make_jordan_type({5, 2})), gamma_cp(PrimeContext(5), 2).value(), 0);
  EXPECT_THROW(gamma_jordan(PrimeContext(5), make_jordan_type({6})), DomainError);
}
