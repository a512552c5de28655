#include "confdiff/rng.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

using confdiff::derive_seed;
using confdiff::Rng;

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(Rng, DifferentSeedsDiverge) {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += a() == b();
  EXPECT_EQ(equal, 0);
}

// Pinned outputs: changing these breaks every stored manifest.
TEST(Rng, StreamIsPinned) {
  Rng r(0);
  const std::array<std::uint64_t, 3> first{r(), r(), r()};
  Rng again(0);
  EXPECT_EQ(again(), first[0]);
  EXPECT_EQ(confdiff::splitmix64_mix(0), 0u);
  // SplitMix64 reference: first output for state 0 is 0xe220a8397b1dcdaf.
  EXPECT_EQ(confdiff::splitmix64_mix(0x9e3779b97f4a7c15ULL),
            0xe220a8397b1dcdafULL);
}

TEST(Rng, UniformInUnitInterval) {
  Rng r(7);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // mean of U[0,1): sd of the estimate is sqrt(1/12/n) ~ 6.5e-4
  EXPECT_NEAR(sum / n, 0.5, 4 * std::sqrt(1.0 / 12.0 / n));
}

TEST(Rng, BernoulliEdges) {
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_TRUE(r.bernoulli(1.0));
    EXPECT_FALSE(r.bernoulli(0.0));
  }
}

TEST(Rng, BelowIsUniform) {
  Rng r(11);
  const int bound = 7, draws = 70000;
  std::array<int, bound> hist{};
  for (int i = 0; i < draws; ++i) {
    const auto x = r.below(bound);
    ASSERT_LT(x, static_cast<std::uint64_t>(bound));
    ++hist[x];
  }
  const double expected = double(draws) / bound;
  const double sd = std::sqrt(draws * (1.0 / bound) * (1 - 1.0 / bound));
  for (int c : hist) EXPECT_NEAR(c, expected, 5 * sd);
  EXPECT_EQ(r.below(1), 0u);
}

TEST(DeriveSeed, DistinctAndDeterministic) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_seed(99, i));
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
  EXPECT_NE(derive_seed(5, 3), derive_seed(6, 3));
}
