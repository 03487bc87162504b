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

#include "giantlab/graph_core.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "giantlab/generators.hpp"
#include "test_util.hpp"

namespace giantlab {
namespace {

using testing::Share;

TEST(NeighborsTest, CompleteGraph) {
  const RegularGraph k4 = gen_complete(4);
  EXPECT_EQ(k4.neighbors(0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(NeighborsTest, PaleyResidues) {
  const RegularGraph g = gen_paley(13);
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 3, 4, 9, 10, 12}));
}

TEST(NeighborsTest, OutOfRangeThrows) {
  EXPECT_THROW(gen_complete(4).neighbors(4), InputError);
}

TEST(NeighborsTest, ZeroProbabilityRetainsNothing) {
  const PercolatedGraph g(Share(gen_paley(13)), 0.0, 7);
  for (Vertex v = 0; v < 13; ++v) EXPECT_TRUE(g.neighbors(v).empty());
}

TEST(NeighborsTest, ImplicitMatchesExplicitEnumeration) {
  for (std::size_t q : {5u, 13u, 17u, 29u, 101u}) {
    const RegularGraph g = gen_paley(q);
    for (Vertex v = 0; v < q; ++v) {
      std::vector<Vertex> expected;
      for (Vertex u = 0; u < q; ++u) {
        if (u != v && g.adjacent(u, v)) expected.push_back(u);
      }
      ASSERT_EQ(g.neighbors(v), expected) << "q=" << q << " v=" << v;
    }
  }
}

TEST(SetStatsTest, TwoVerticesOfK4) {
  const PercolatedGraph g(Share(gen_complete(4)), 1.0, 1);
  const SetStats s = set_stats(g, VertexSet({0, 1}));
  EXPECT_EQ(s.internal_edges, 1u);
  EXPECT_EQ(s.boundary_edges, 4u);
  EXPECT_EQ(s.external_neighbors, 2u);
  EXPECT_TRUE(s.is_connected);
}

TEST(SetStatsTest, WholeVertexSetHasNoExterior) {
  const PercolatedGraph g(Share(gen_paley(13)), 0.5, 3);
  const SetStats s = set_stats(g, VertexSet::Range(13));
  EXPECT_EQ(s.boundary_edges, 0u);
  EXPECT_EQ(s.external_neighbors, 0u);
}

TEST(SetStatsTest, SingleVertexOfFiveCycle) {
  const PercolatedGraph g(Share(testing::Cycle(5)), 1.0, 1);
  const SetStats s = set_stats(g, VertexSet({0}));
  EXPECT_EQ(s.internal_edges, 0u);
  EXPECT_EQ(s.boundary_edges, 2u);
  EXPECT_EQ(s.external_neighbors, 2u);
}

TEST(SetStatsTest, RejectsEmptyAndOutOfRange) {
  const PercolatedGraph g(Share(gen_complete(4)), 1.0, 1);
  EXPECT_THROW(set_stats(g, VertexSet()), InputError);
  EXPECT_THROW(set_stats(g, VertexSet({0, 9})), InputError);
}

TEST(ComponentsTest, ZeroProbabilityGivesSingletons) {
  const PercolatedGraph g(Share(gen_complete(30)), 0.0, 5);
  const ComponentCensus c = connected_components(g);
  EXPECT_EQ(c.count(), 30u);
  for (std::size_t s : c.sizes) EXPECT_EQ(s, 1u);
}

TEST(ComponentsTest, FullRetentionOnConnectedHost) {
  const PercolatedGraph g(Share(gen_paley(29)), 1.0, 5);
  const ComponentCensus c = connected_components(g);
  ASSERT_EQ(c.count(), 1u);
  EXPECT_EQ(c.sizes[0], 29u);
}

TEST(ComponentsTest, ExplicitRetainedSet) {
  const std::vector<Edge> kept{{0, 1}, {2, 3}};
  const PercolatedGraph g = PercolatedGraph::FromRetainedEdges(Share(gen_complete(4)), kept);
  const ComponentCensus c = connected_components(g);
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(c.representatives, (std::vector<Vertex>{0, 2}));
}

TEST(ComponentsTest, RetainedSetMustUseHostEdges) {
  const std::vector<Edge> bad{{0, 2}};
  EXPECT_THROW(PercolatedGraph::FromRetainedEdges(Share(testing::Cycle(5)), bad), InputError);
}

TEST(ExcessTest, SpanningTreeIsZero) {
  const SparseGraph path = testing::PathGraph(7);
  EXPECT_EQ(excess(path, VertexSet::Range(7)), 0);
}

TEST(ExcessTest, CycleIsOne) {
  const PercolatedGraph g(Share(testing::Cycle(5)), 1.0, 1);
  EXPECT_EQ(excess(g, VertexSet::Range(5)), 1);
}

TEST(ExcessTest, K4IsThree) {
  const PercolatedGraph g(Share(gen_complete(4)), 1.0, 1);
  EXPECT_EQ(excess(g, VertexSet::Range(4)), 3);
}

TEST(ExcessTest, RejectsDisconnectedSet) {
  const SparseGraph path = testing::PathGraph(4);
  EXPECT_THROW(excess(path, VertexSet({0, 2})), InputError);
}

// ----------------------------------------------------------- properties

TEST(GraphCoreProperty, BoundaryBracketsNeighborhood) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 30;
    const SparseGraph g = testing::RandomSparse(n, 0.2, rng);
    const std::size_t max_deg = g.max_degree();
    const VertexSet s = testing::RandomSubset(n, 1 + rng() % n, rng);
    const SetStats st = set_stats(g, s);
    EXPECT_LE(st.external_neighbors, st.boundary_edges);
    EXPECT_LE(st.boundary_edges, s.size() * max_deg);
  }
}

TEST(GraphCoreProperty, ComplementHasSameBoundary) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const SparseGraph g = testing::RandomSparse(n, 0.25, rng);
    const VertexSet s = testing::RandomSubset(n, 1 + rng() % (n - 1), rng);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!s.contains(v)) rest.push_back(v);
    }
    EXPECT_EQ(set_stats(g, s).boundary_edges, set_stats(g, VertexSet(rest)).boundary_edges);
  }
}

TEST(GraphCoreProperty, CensusPartitionsVerticesAndMatchesBfs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const SparseGraph g = testing::RandomSparse(n, 1.5 / static_cast<double>(n), rng);
    const ComponentCensus c = connected_components(g);
    EXPECT_EQ(std::accumulate(c.sizes.begin(), c.sizes.end(), std::size_t{0}), n);
    EXPECT_EQ(c.sizes, testing::BruteComponentSizes(n, g.edges()));
    for (Vertex v = 0; v < n; ++v) EXPECT_LT(c.component_of[v], c.count());
  }
}

TEST(GraphCoreProperty, PercolationIsDeterministic) {
  const auto host = Share(gen_paley(101));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PercolatedGraph a(host, 0.3, seed), b(host, 0.3, seed);
    for (const Edge& e : host->edges()) {
      ASSERT_EQ(a.retained(e.u, e.v), b.retained(e.u, e.v));
      ASSERT_EQ(a.retained(e.u, e.v), a.retained(e.v, e.u));
    }
    EXPECT_EQ(a.graph().edges(), b.graph().edges());
  }
}

TEST(GraphCoreProperty, InducedSubgraphKeepsInternalEdges) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 25;
    const SparseGraph g = testing::RandomSparse(n, 0.3, rng);
    const VertexSet s = testing::RandomSubset(n, 1 + rng() % n, rng);
    const InducedSubgraph sub = induce(g, s);
    EXPECT_EQ(sub.graph.num_edges(), set_stats(g, s).internal_edges);
    for (const Edge& e : sub.graph.edges()) {
      EXPECT_TRUE(g.has_edge(sub.to_parent[e.u], sub.to_parent[e.v]));
    }
  }
}

}  // namespace
}  // namespace giantlab
