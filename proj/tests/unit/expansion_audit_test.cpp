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

#include "giantlab/expansion_audit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "giantlab/generators.hpp"
#include "giantlab/percolation.hpp"
#include "test_util.hpp"

namespace giantlab {
namespace {

using testing::Share;

// Brute-force maximum matching of the bipartite graph S -> outside
// neighbors along retained edges.
std::size_t BruteMatching(const PercolatedGraph& g, const VertexSet& s) {
  std::vector<std::vector<Vertex>> right;
  for (Vertex v : s) {
    right.emplace_back();
    for (Vertex u : g.neighbors(v)) {
      if (!s.contains(u)) right.back().push_back(u);
    }
  }
  std::vector<bool> used(g.n(), false);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) -> std::size_t {
    if (i == right.size()) return 0;
    std::size_t out = best(i + 1);
    for (Vertex u : right[i]) {
      if (used[u]) continue;
      used[u] = true;
      out = std::max(out, 1 + best(i + 1));
      used[u] = false;
    }
    return out;
  };
  return best(0);
}

AuditOptions Exhaustive(AuditBand band, std::size_t lo, std::size_t hi) {
  AuditOptions opt;
  opt.mode = AuditMode::kExhaustive;
  opt.band = band;
  opt.band_override = SizeBand{lo, hi};
  return opt;
}

TEST(ThresholdsTest, Formulas) {
  const ExpansionThresholds t = expansion_thresholds(1009, 0.4);
  const double e2 = 0.16, li = std::log(2.5);
  EXPECT_DOUBLE_EQ(t.s_min, 16.0 * std::log(1009.0) / e2);
  EXPECT_DOUBLE_EQ(t.s_mid, e2 * 1009 / 50.0);
  EXPECT_DOUBLE_EQ(t.s_max, 12.0 * 0.4 * 1009 / 11.0);
  EXPECT_DOUBLE_EQ(t.factor_connected, e2 / (40.0 * li));
  EXPECT_DOUBLE_EQ(t.factor_linear, e2 / (400.0 * 400.0 * 6.0 * li * li));
  EXPECT_DOUBLE_EQ(t.edge_factor, e2 / (400.0 * 400.0 * li));
  EXPECT_FALSE(t.valid());  // s_min > s_mid at this n
  EXPECT_THROW(expansion_thresholds(100, 1.0), InputError);
}

TEST(VertexAuditTest, MatchesBruteForceOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto host = Share(gen_random_regular(18, 3, seed));
    const PercolatedGraph g(host, 0.6, seed);
    const ComponentCensus c = connected_components(g);
    const InducedSubgraph giant = induce(g.graph(), c.members(0));
    const std::size_t m = c.sizes[0];
    const ExpansionThresholds t = expansion_thresholds(18, 0.5);
    for (bool edge : {false, true}) {
      for (AuditBand band : {AuditBand::kConnected, AuditBand::kLinear}) {
        const std::size_t lo = band == AuditBand::kConnected ? 1 : (m + 3) / 4;
        const std::size_t hi = m / 2;
        if (lo > hi) continue;
        const ExpansionReport r =
            edge ? edge_expansion_audit(g, t, Exhaustive(band, lo, hi))
                 : vertex_expansion_audit(g, t, Exhaustive(band, lo, hi));
        const auto oracle =
            testing::BruteExpansion(giant.graph, lo, hi, band == AuditBand::kConnected, edge);
        ASSERT_TRUE(oracle.has_value());
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_EQ(r.witness->set, giant.ToParent(oracle->members)) << "seed " << seed;
        EXPECT_DOUBLE_EQ(r.witness->ratio, static_cast<double>(oracle->measure) /
                                               static_cast<double>(oracle->members.size()));
      }
    }
  }
}

TEST(VertexAuditTest, GiantAboveTheBandIsNotChecked) {
  const auto host = Share(gen_paley(1009));
  const PercolatedGraph g = percolate(host, 0.4, 2);
  const std::size_t l1 = giant_census(g, 0.4).L1_size;
  const ExpansionThresholds t = expansion_thresholds(1009, 0.4);
  ASSERT_GT(static_cast<double>(l1), t.s_max);
  AuditOptions opt;
  opt.band = AuditBand::kLinear;
  opt.samples = 200;
  const ExpansionReport r = vertex_expansion_audit(g, t, opt);
  EXPECT_LT(r.sizes.hi, l1);
}

TEST(VertexAuditTest, EmptyBandIsReported) {
  const PercolatedGraph g(Share(gen_paley(101)), 0.04, 1);
  const ExpansionReport r = vertex_expansion_audit(g, expansion_thresholds(101, 0.3), {});
  EXPECT_TRUE(r.band_empty);
  EXPECT_EQ(r.sets_checked, 0u);
}

TEST(VertexAuditTest, ViolationsAreGenuineAndReported) {
  // Factor 1 on a sparse giant: many connected sets have |N(S)| < |S|.
  const PercolatedGraph g(Share(gen_random_regular(40, 3, 5)), 0.7, 5);
  ExpansionThresholds t = expansion_thresholds(40, 0.5);
  t.factor_connected = 1.0;
  AuditOptions opt = Exhaustive(AuditBand::kConnected, 2, 8);
  const ExpansionReport r = vertex_expansion_audit(g, t, opt);
  ASSERT_GT(r.violation_count, 0u);
  for (const SetRecord& v : r.violations) {
    const SetStats st = set_stats(g, v.set);
    EXPECT_EQ(st.external_neighbors, v.external_neighbors);
    EXPECT_LT(static_cast<double>(st.external_neighbors), static_cast<double>(v.set.size()));
    EXPECT_TRUE(st.is_connected);
  }
}

TEST(EdgeAuditTest, EdgeBoundaryDominatesNeighborhood) {
  const PercolatedGraph g(Share(gen_random_regular(60, 4, 3)), 0.4, 3);
  AuditOptions opt;
  opt.band_override = SizeBand{1, 10};
  opt.samples = 500;
  ExpansionThresholds t = expansion_thresholds(60, 0.5);
  t.factor_connected = t.edge_factor = 2.0;
  const ExpansionReport v = vertex_expansion_audit(g, t, opt);
  const ExpansionReport e = edge_expansion_audit(g, t, opt);
  // Same seeds draw the same sets; edge violations imply vertex violations.
  EXPECT_LE(e.violation_count, v.violation_count);
  for (const SetRecord& r : e.violations) EXPECT_GE(r.boundary_edges, r.external_neighbors);
}

TEST(EdgeAuditTest, DisjointUnionBoundaryIdentity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const SparseGraph g = testing::RandomSparse(30, 0.15, rng);
    const VertexSet a = testing::RandomSubset(30, 1 + rng() % 10, rng);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < 30; ++v) {
      if (!a.contains(v)) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    rest.resize(1 + rng() % 10);
    const VertexSet b(rest);
    std::vector<Vertex> both(a.begin(), a.end());
    both.insert(both.end(), b.begin(), b.end());
    std::uint64_t between = 0;
    for (Vertex u : a) {
      for (Vertex v : b) between += g.has_edge(u, v);
    }
    EXPECT_EQ(set_stats(g, VertexSet(both)).boundary_edges,
              set_stats(g, a).boundary_edges + set_stats(g, b).boundary_edges - 2 * between);
  }
}

TEST(MatchingTest, SingleVertexWithThreeRetainedEdges) {
  const std::vector<Edge> kept{{0, 1}, {0, 2}, {0, 3}};
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(6)), kept);
  EXPECT_EQ(matching_lower_bound(g.host(), g, VertexSet({0})), 1u);
}

TEST(MatchingTest, NoRetainedBoundary) {
  const std::vector<Edge> kept{{0, 1}};
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(6)), kept);
  EXPECT_EQ(matching_lower_bound(g.host(), g, VertexSet({0, 1})), 0u);
}

TEST(MatchingProperty, EqualsBruteForceAndBoundsNeighborhood) {
  std::mt19937_64 rng(6);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto host = Share(seed % 2 ? gen_paley(29) : gen_random_regular(30, 5, seed));
    const PercolatedGraph g(host, 0.35, seed);
    const VertexSet s = testing::RandomSubset(host->n(), 1 + rng() % 10, rng);
    const std::size_t nu = matching_lower_bound(*host, g, s);
    EXPECT_EQ(nu, BruteMatching(g, s));
    EXPECT_LE(nu, set_stats(g, s).external_neighbors);
  }
}

TEST(MonotonicityProperty, AddingEdgesNeverShrinksBoundaries) {
  std::mt19937_64 rng(7);
  const auto host = Share(gen_paley(37));
  const std::vector<Edge> all = host->edges();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Edge> kept;
    for (const Edge& e : all) {
      if (rng() % 4 == 0) kept.push_back(e);
    }
    const VertexSet s = testing::RandomSubset(37, 1 + rng() % 20, rng);
    const SetStats before = set_stats(PercolatedGraph::FromRetainedEdges(host, kept), s);
    for (const Edge& e : all) {
      if (std::find(kept.begin(), kept.end(), e) == kept.end()) {
        kept.push_back(e);
        break;
      }
    }
    std::sort(kept.begin(), kept.end());
    const SetStats after = set_stats(PercolatedGraph::FromRetainedEdges(host, kept), s);
    EXPECT_GE(after.boundary_edges, before.boundary_edges);
    EXPECT_GE(after.external_neighbors, before.external_neighbors);
  }
}

TEST(HighDegreeMassTest, NoQualifyingVertex) {
  const PercolatedGraph g(Share(gen_random_regular(50, 5, 1)), 1.0, 1);
  const HighDegreeMass h = high_degree_mass(g, 0.1);
  EXPECT_NEAR(h.threshold, 5.0 * std::log(10.0), 1e-12);
  EXPECT_EQ(h.mass, 0u);
}

TEST(HighDegreeMassTest, ZeroRetention) {
  const PercolatedGraph g(Share(gen_complete(40)), 0.0, 1);
  EXPECT_EQ(high_degree_mass(g, 0.1).mass, 0u);
}

TEST(HighDegreeMassTest, PlantedStar) {
  std::vector<Edge> star;
  for (Vertex v = 1; v <= 13; ++v) star.push_back({0, v});
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(20)), star);
  const HighDegreeMass h = high_degree_mass(g, 0.1);
  EXPECT_EQ(h.mass, 13u);
  EXPECT_EQ(h.vertices, 1u);
}

TEST(IncidentEdgeTest, TreeGiantHasRatioAtLeastOneMinusOneOverK) {
  std::vector<Edge> path;
  for (Vertex v = 0; v + 1 < 20; ++v) path.push_back({v, v + 1});
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(40)), path);
  const IncidentEdgeReport r = incident_edge_audit(g, 300, 1);
  EXPECT_EQ(r.min_size, static_cast<std::size_t>(std::ceil(std::log(40.0))));
  EXPECT_EQ(r.sets_checked, 300u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GE(r.max_ratio, 1.0 - 1.0 / static_cast<double>(r.witness->set.size()));
  EXPECT_LT(r.max_ratio, 10.0);
}

TEST(IncidentEdgeTest, RejectsDenseRetention) {
  const PercolatedGraph g(Share(gen_paley(13)), 1.0, 1);
  EXPECT_THROW(incident_edge_audit(g, 10, 1), InputError);
}

TEST(TreeCountTest, K4) {
  const TreeCount t = tree_count_bound(gen_complete(4), 3);
  ASSERT_TRUE(t.exact.has_value());
  EXPECT_EQ(*t.exact, 12u);
  EXPECT_DOUBLE_EQ(t.bound, 18.0);
  EXPECT_TRUE(t.within);
}

TEST(TreeCountTest, SmallKAreTight) {
  for (const RegularGraph& g : {gen_complete(6), testing::Petersen(), gen_paley(5)}) {
    const TreeCount one = tree_count_bound(g, 1);
    EXPECT_EQ(*one.exact, g.n());
    EXPECT_DOUBLE_EQ(one.bound, static_cast<double>(g.n()));
    const TreeCount two = tree_count_bound(g, 2);
    EXPECT_EQ(*two.exact, g.num_edges());
    EXPECT_DOUBLE_EQ(two.bound, static_cast<double>(g.num_edges()));
  }
}

TEST(TreeCountTest, PetersenFrozenCounts) {
  const std::vector<std::uint64_t> expected{10, 15, 30, 70, 180};
  for (std::size_t k = 1; k <= 5; ++k) {
    const TreeCount t = tree_count_bound(testing::Petersen(), k);
    EXPECT_EQ(*t.exact, expected[k - 1]) << k;
    EXPECT_TRUE(t.within);
  }
}

TEST(TreeCountTest, LargeHostsGetBoundOnly) {
  const TreeCount t = tree_count_bound(gen_paley(13), 3);
  EXPECT_FALSE(t.exact.has_value());
  EXPECT_DOUBLE_EQ(t.bound, 13.0 * 3.0 * 36.0 / 6.0);
}

TEST(TreeCountProperty, ExactNeverExceedsBound) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const RegularGraph g = gen_random_regular(12, 2 + seed % 4, seed);
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_TRUE(tree_count_bound(g, k).within);
  }
}

TEST(BadVolumeTest, Paley13HasNoPoorSets) {
  const PercolatedGraph g(Share(gen_paley(13)), 1.0, 1);
  BadVolumeOptions opt;
  opt.c = 0.5;
  const BadVolume b = bad_volume(g, 0.5, opt);
  EXPECT_FALSE(b.band_empty);
  EXPECT_EQ(b.mode, AuditMode::kExhaustive);
  EXPECT_GT(b.candidates, 0u);
  EXPECT_EQ(b.volume, 0u);
}

TEST(BadVolumeTest, PlantedPendantPathIsFound) {
  std::vector<Edge> kept = gen_paley(197).edges();
  kept.push_back({0, 197});
  for (Vertex v = 197; v < 200; ++v) kept.push_back({v, v + 1});
  std::sort(kept.begin(), kept.end());
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(201)), kept);
  BadVolumeOptions opt;
  opt.c = 0.1;
  opt.samples = 2000;
  const BadVolume b = bad_volume(g, 0.9, opt);
  EXPECT_EQ(b.mode, AuditMode::kSampled);
  EXPECT_EQ(b.volume, 4u);
  ASSERT_EQ(b.packed.size(), 1u);
  EXPECT_EQ(b.packed[0], VertexSet({197, 198, 199, 200}));
}

TEST(BadVolumeTest, TinyConstantEmptiesTheBand) {
  const PercolatedGraph g(Share(gen_paley(101)), 0.1, 1);
  BadVolumeOptions opt;
  opt.c = 1e-6;
  const BadVolume b = bad_volume(g, 0.5, opt);
  EXPECT_TRUE(b.band_empty);
  EXPECT_EQ(b.volume, 0u);
}

}  // namespace
}  // namespace giantlab
