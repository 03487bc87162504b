// Copyright 2026 The giantlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "giantlab/percolation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "giantlab/generators.hpp"
#include "test_util.hpp"

namespace giantlab {
namespace {

using testing::Share;

// Newton's method on ln y - y = ln c - c, started left of the root: an
// independent route to the bisection solver's answer.
double NewtonY(double epsilon) {
  const double c = 1.0 + epsilon;
  const double rhs = std::log(c) - c;
  double y = 0.5 / c;
  for (int i = 0; i < 200; ++i) y -= (std::log(y) - y - rhs) / (1.0 / y - 1.0);
  return y;
}

TEST(SolveYTest, FrozenValues) {
  EXPECT_NEAR(solve_y(0.1), 0.9062524420050095, 1e-12);
  EXPECT_NEAR(solve_y(0.4), 0.6845843496371739, 1e-12);
  EXPECT_NEAR(giant_fraction(0.1), 0.1761341436318096, 1e-12);
  EXPECT_NEAR(giant_fraction(0.2), 0.3136983310412177, 1e-12);
  EXPECT_NEAR(giant_fraction(0.4), 0.5110111788305901, 1e-12);
}

TEST(SolveYTest, MatchesNewtonOracle) {
  for (double eps : {0.01, 0.05, 0.1, 0.3, 0.6, 1.0, 2.5}) {
    EXPECT_NEAR(solve_y(eps), NewtonY(eps), 1e-12) << eps;
  }
}

TEST(SolveYTest, SmallEpsilonTendsToOne) {
  EXPECT_NEAR(solve_y(1e-6), 1.0, 1e-5);
  EXPECT_LT(solve_y(1e-6), 1.0);
}

TEST(SolveYTest, RejectsNonPositive) {
  EXPECT_THROW(solve_y(0.0), InputError);
  EXPECT_THROW(solve_y(-0.1), InputError);
}

TEST(SolveYProperty, SubstitutionResidual) {
  for (int i = 1; i <= 400; ++i) {
    const double eps = 0.005 * i;
    const double y = solve_y(eps);
    const double c = 1.0 + eps;
    ASSERT_GT(y, 0.0);
    ASSERT_LT(y, 1.0);
    ASSERT_LE(std::abs(y * std::exp(-y) - c * std::exp(-c)), 1e-12) << eps;
  }
}

TEST(PercolateTest, FullRetentionReproducesHost) {
  const auto host = Share(gen_paley(13));
  const PercolatedGraph g = percolate(host, 5.0, 1);
  EXPECT_DOUBLE_EQ(g.p(), 1.0);
  EXPECT_EQ(g.graph().edges(), host->edges());
}

TEST(PercolateTest, RejectsProbabilityAboveOne) {
  EXPECT_THROW(percolate(Share(gen_paley(13)), 5.5, 1), InputError);
}

TEST(PercolateTest, RetainedEdgeCountIsBinomial) {
  const auto host = Share(gen_complete(100));
  const double p = 1.2 / 99.0, m = 4950.0;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    total += static_cast<double>(percolate(host, 0.2, seed).num_retained_edges());
  }
  const double mean = total / 100.0;
  const double sigma_of_mean = std::sqrt(m * p * (1 - p) / 100.0);
  EXPECT_LE(std::abs(mean - m * p), 3.0 * sigma_of_mean);
}

TEST(PercolateTest, SameSeedSameCensus) {
  const auto host = Share(gen_paley(1009));
  const GiantCensus a = giant_census(percolate(host, 0.4, 77), 0.4);
  const GiantCensus b = giant_census(percolate(host, 0.4, 77), 0.4);
  EXPECT_EQ(a.L1, b.L1);
  EXPECT_EQ(a.second_size, b.second_size);
}

TEST(GiantCensusTest, ConnectedHostAtFullRetention) {
  const GiantCensus c = giant_census(percolate(Share(gen_paley(13)), 5.0, 1), 5.0);
  EXPECT_EQ(c.L1_size, 13u);
  EXPECT_DOUBLE_EQ(c.L1_fraction, 1.0);
  EXPECT_EQ(c.second_size, 0u);
  EXPECT_EQ(c.excess_L1, 39 - 13 + 1);
  EXPECT_NEAR(c.theory_fraction, giant_fraction(5.0), 1e-15);
}

TEST(RandomizedBfsTest, TriangleAtFullRetention) {
  const BfsTrace t = randomized_bfs(gen_complete(3), 1.0, 5);
  EXPECT_EQ(t.positives, 2u);
  EXPECT_EQ(t.queries, 2u);
  ASSERT_EQ(t.queue_empty_at.size(), 1u);
  EXPECT_EQ(t.queue_empty_at[0], t.queries);
  ASSERT_EQ(t.components.size(), 1u);
  EXPECT_EQ(t.components[0].size, 3u);
}

TEST(RandomizedBfsTest, FullRetentionLayeringDiscoversEverything) {
  // Paley(13) at p = 1 with the switch right after the root's first query.
  BfsOptions opt;
  opt.switch_step = 1;
  const BfsTrace t = randomized_bfs(gen_paley(13), 5.0, 5, opt);
  ASSERT_TRUE(t.layered.switch_reached);
  EXPECT_EQ(t.layered.discovered_total, 13u);
}

TEST(RandomizedBfsTest, OrderDoesNotChangeComponentSizes) {
  const RegularGraph host = gen_paley(101);
  BfsOptions shuffled;
  shuffled.random_order = true;
  shuffled.order_seed = 99;
  auto sizes = [](const BfsTrace& t) {
    std::vector<std::size_t> s;
    for (const BfsComponent& c : t.components) s.push_back(c.size);
    std::sort(s.rbegin(), s.rend());
    return s;
  };
  EXPECT_EQ(sizes(randomized_bfs(host, 0.5, 3)), sizes(randomized_bfs(host, 0.5, 3, shuffled)));
}

TEST(RandomizedBfsTest, Q0ThresholdIsRecorded) {
  const BfsTrace t = randomized_bfs(gen_paley(1009), 0.4, 1);
  EXPECT_DOUBLE_EQ(t.layered.q0_threshold, 0.16 * 1009 / 9.0);
  EXPECT_DOUBLE_EQ(t.layered.cutoff, 7.0 * 0.16 * 1009 / 90.0);
  EXPECT_DOUBLE_EQ(t.layered.claim_size, 11.0 * 0.4 * 1009 / 10.0);
  EXPECT_EQ(t.layered.switch_step, static_cast<std::uint64_t>(std::floor(0.3 * 1009 * 504)));
}

TEST(RandomizedBfsProperty, TraceInvariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RegularGraph host = seed % 2 ? gen_paley(101) : gen_random_regular(120, 5, seed);
    const double eps = 0.1 + 0.05 * static_cast<double>(seed % 10);
    const BfsTrace t = randomized_bfs(host, eps, seed);
    const std::size_t n = host.n();
    ASSERT_EQ(t.s_size.size(), t.queries);
    for (std::size_t i = 0; i < t.s_size.size(); ++i) {
      ASSERT_EQ(t.s_size[i] + t.q_size[i] + t.t_size[i], n);
      ASSERT_GE(t.s_size[i] + t.q_size[i], 1u);
    }
    EXPECT_LE(t.queries, host.num_edges());
    EXPECT_EQ(t.positives, n - t.components.size());
    EXPECT_EQ(t.queue_empty_at.size(), t.components.size());
  }
}

TEST(RandomizedBfsProperty, SameSeedMatchesPercolatedComponents) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto host = Share(seed % 2 ? gen_paley(197) : gen_random_regular(200, 5, seed));
    const double eps = 0.05 * static_cast<double>(1 + seed % 12);
    const BfsTrace t = randomized_bfs(*host, eps, seed);
    std::vector<std::size_t> bfs;
    for (const BfsComponent& c : t.components) bfs.push_back(c.size);
    std::sort(bfs.rbegin(), bfs.rend());
    const PercolatedGraph g = percolate(host, eps, seed);
    EXPECT_EQ(bfs, connected_components(g).sizes) << host->describe() << " seed " << seed;
  }
}

}  // namespace
}  // namespace giantlab
