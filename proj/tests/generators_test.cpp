#include "confdiff/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>

#include "confdiff/analysis.hpp"

using namespace confdiff;

TEST(GenComplete, EdgeCounts) {
  EXPECT_EQ(gen_complete(100).edge_count(), 4950u);
  EXPECT_EQ(gen_complete(1).edge_count(), 0u);
  EXPECT_EQ(gen_complete(2).edge_count(), 1u);
  EXPECT_TRUE(gen_complete(10).is_unweighted());
  EXPECT_THROW(gen_complete(0), InputError);
}

TEST(GenRandom, ExtremeProbabilities) {
  EXPECT_EQ(gen_random(20, 1.0, 9), gen_complete(20));
  EXPECT_EQ(gen_random(20, 0.0, 9).edge_count(), 0u);
}

TEST(GenRandom, RejectsBadProbability) {
  EXPECT_THROW(gen_random(10, 1.5, 1), InputError);
  EXPECT_THROW(gen_random(10, -0.1, 1), InputError);
  EXPECT_THROW(gen_random(0, 0.5, 1), InputError);
}

TEST(GenRandom, Deterministic) {
  EXPECT_EQ(gen_random(60, 0.5, 123), gen_random(60, 0.5, 123));
  EXPECT_NE(gen_random(60, 0.5, 123), gen_random(60, 0.5, 124));
}

TEST(GenRandom, MeanWeightNearHalfAtN1000) {
  const double m = mean_offdiagonal_weight(gen_random(1000, 0.5, 2024));
  EXPECT_NEAR(m, 0.5, 0.02);
}

// Binomial check: mean edge count over seeds within 3 standard errors of
// p * n(n-1)/2.
TEST(GenRandom, EdgeCountMatchesBinomial) {
  const std::size_t n = 30, seeds = 400;
  const double p = 0.3;
  const double pairs = n * (n - 1) / 2.0;
  double total = 0.0;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    total += static_cast<double>(gen_random(n, p, s).edge_count());
  }
  const double se = std::sqrt(pairs * p * (1 - p) / seeds);
  EXPECT_NEAR(total / seeds, p * pairs, 3 * se);
}

TEST(GenStochastic, EveryPairWeighted) {
  const Graph g = gen_stochastic(2, 5);
  EXPECT_EQ(g.edge_count(), 1u);
  const Graph h = gen_stochastic(50, 6);
  EXPECT_EQ(h.edge_count(), 50u * 49 / 2);
  for (const auto& e : h.edges()) {
    EXPECT_GT(e.weight, 0.0);
    EXPECT_LE(e.weight, 1.0);
  }
}

TEST(GenStochastic, MeanWeightNearHalfAtN1000) {
  EXPECT_NEAR(mean_offdiagonal_weight(gen_stochastic(1000, 77)), 0.5, 0.02);
}

TEST(GenStochastic, Deterministic) {
  EXPECT_EQ(gen_stochastic(40, 8), gen_stochastic(40, 8));
}

TEST(GenScaleFree, SmallSizes) {
  EXPECT_EQ(gen_scale_free(1, 3).edge_count(), 0u);
  EXPECT_EQ(gen_scale_free(2, 3), Graph(2, {{0, 1}}));
  EXPECT_EQ(gen_scale_free(100, 3).edge_count(), 99u);
}

TEST(GenScaleFree, IsTree) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = gen_scale_free(1 + s * 3, s);
    ASSERT_EQ(g.edge_count(), g.vertex_count() - 1);
    ASSERT_TRUE(is_connected(g));
    ASSERT_TRUE(g.is_unweighted());
  }
}

TEST(GenScaleFree, Deterministic) {
  EXPECT_EQ(gen_scale_free(500, 42), gen_scale_free(500, 42));
}

// Third vertex sees two degree-1 vertices: each is picked with probability
// exactly 1/2.
TEST(GenScaleFree, ThirdVertexAttachmentIsFair) {
  int to_zero = 0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    to_zero += gen_scale_free(3, s).has_edge(0, 2);
  }
  EXPECT_NEAR(to_zero / double(seeds), 0.5, 0.05);
}

// Exhaustive oracle for n = 5: enumerate every attachment sequence with its
// exact probability and compare the distribution of the largest degree.
TEST(GenScaleFree, MatchesExhaustivePreferentialAttachment) {
  const std::size_t n = 5;
  std::map<std::size_t, double> exact;
  std::function<void(std::vector<std::size_t>, double)> grow =
      [&](std::vector<std::size_t> deg, double p) {
        if (deg.size() == n) {
          exact[*std::max_element(deg.begin(), deg.end())] += p;
          return;
        }
        std::size_t total = 0;
        for (auto d : deg) total += d;
        for (std::size_t v = 0; v < deg.size(); ++v) {
          auto next = deg;
          ++next[v];
          next.push_back(1);
          grow(next, p * double(deg[v]) / double(total));
        }
      };
  grow({1, 1}, 1.0);

  const int seeds = 40000;
  std::map<std::size_t, double> seen;
  for (int s = 0; s < seeds; ++s) {
    const auto h = degree_histogram(gen_scale_free(n, s));
    seen[h.rbegin()->first] += 1.0 / seeds;
  }
  double total = 0.0;
  for (const auto& [k, p] : exact) {
    total += p;
    const double se = std::sqrt(p * (1 - p) / seeds);
    EXPECT_NEAR(seen[k], p, 4 * se) << "max degree " << k;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  // by hand: star(4) and path(4) are equally likely at n = 4, giving
  // max degree 2 -> 1/6, 3 -> 7/12, 4 -> 1/4 at n = 5
  EXPECT_NEAR(exact[2], 1.0 / 6, 1e-12);
  EXPECT_NEAR(exact[3], 7.0 / 12, 1e-12);
  EXPECT_NEAR(exact[4], 1.0 / 4, 1e-12);
}

TEST(GenScaleFree, MostVerticesAreLeaves) {
  double frac = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    frac += degree_histogram(gen_scale_free(100, s))[1] / 100.0;
  }
  EXPECT_GT(frac / seeds, 0.6);
}

TEST(GenScaleFree, DegreeCountsDecreaseOverSmallDegrees) {
  DegreeHistogram total;
  for (int s = 0; s < 100; ++s)
    for (const auto& [k, c] : degree_histogram(gen_scale_free(100, s)))
      total[k] += c;
  EXPECT_GE(total[1], total[2]);
  EXPECT_GE(total[2], total[3]);
  EXPECT_GE(total[3], total[4]);
}

TEST(GeneratorSpec, Validation) {
  GeneratorSpec spec{Family::complete, 10, 0.5, 1};
  EXPECT_THROW(spec.validate(), InputError);
  spec = {Family::random, 10, 1.5, 1};
  EXPECT_THROW(spec.validate(), InputError);
  spec = {Family::random, 0, std::nullopt, 1};
  EXPECT_THROW(spec.validate(), InputError);
  spec = {Family::random, 10, std::nullopt, 1};
  EXPECT_NO_THROW(spec.validate());
  EXPECT_EQ(spec.effective_edge_prob(), 0.5);
}

TEST(GeneratorSpec, DispatchMatchesDirectCalls) {
  EXPECT_EQ(generate({Family::random, 30, 0.2, 4}), gen_random(30, 0.2, 4));
  EXPECT_EQ(generate({Family::stochastic, 30, std::nullopt, 4}),
            gen_stochastic(30, 4));
  EXPECT_EQ(generate({Family::scale_free, 30, std::nullopt, 4}),
            gen_scale_free(30, 4));
  EXPECT_EQ(generate({Family::complete, 30, std::nullopt, 4}), gen_complete(30));
}

TEST(Family, ParseAndPrint) {
  for (auto f : {Family::complete, Family::random, Family::stochastic,
                 Family::scale_free}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("lattice"), InputError);
}
