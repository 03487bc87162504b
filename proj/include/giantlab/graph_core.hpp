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

// Host graphs, percolated subgraphs, and the set/boundary/component
// primitives shared by every analysis module.

#ifndef GIANTLAB_GRAPH_CORE_HPP_
#define GIANTLAB_GRAPH_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "giantlab/error.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphKind { kComplete, kPaley, kRandomRegular, kLoaded };

std::string_view KindName(GraphKind kind);

// An n-vertex d-regular simple graph. Complete and Paley hosts keep an
// arithmetic adjacency rule instead of a neighbor table, so dense hosts cost
// O(n) memory. Immutable after construction.
class RegularGraph {
 public:
  static RegularGraph Complete(std::size_t n);
  // `residue` has q entries; residue[x] != 0 iff x is a nonzero square mod q.
  static RegularGraph Paley(std::size_t q, std::vector<std::uint8_t> residue);
  // `table` holds n rows of d neighbors each. Rows are sorted here; throws
  // InputError unless the table describes a simple symmetric d-regular graph.
  static RegularGraph FromNeighborTable(GraphKind kind, std::size_t n,
                                        std::size_t d,
                                        std::vector<Vertex> table);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  GraphKind kind() const { return kind_; }
  bool implicit() const {
    return kind_ == GraphKind::kComplete || kind_ == GraphKind::kPaley;
  }
  std::uint64_t num_edges() const {
    return static_cast<std::uint64_t>(n_) * d_ / 2;
  }

  // Sorted neighbor list. Throws InputError when v >= n.
  std::vector<Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  // All edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const;
  // "complete(5)", "paley(13)", "random_regular(100,6)", "loaded(10,3)".
  std::string describe() const;

  // Sorted nonzero quadratic residues; empty for non-Paley hosts.
  std::span<const Vertex> residues() const { return residue_list_; }

  // Visits neighbors of v in increasing order. v must be in range.
  template <typename F>
  void ForEachNeighbor(Vertex v, F&& f) const {
    switch (kind_) {
      case GraphKind::kComplete:
        for (Vertex u = 0; u < n_; ++u) {
          if (u != v) f(u);
        }
        break;
      case GraphKind::kPaley: {
        // v + r wraps for r >= q - v; those land below v and come first.
        const Vertex q = static_cast<Vertex>(n_);
        for (Vertex r : residue_list_) {
          if (r >= q - v) f(r + v - q);
        }
        for (Vertex r : residue_list_) {
          if (r < q - v) f(r + v);
        }
        break;
      }
      default: {
        const Vertex* row = table_.data() + static_cast<std::size_t>(v) * d_;
        for (std::size_t i = 0; i < d_; ++i) f(row[i]);
      }
    }
  }

 private:
  RegularGraph() = default;

  std::size_t n_ = 0;
  std::size_t d_ = 0;
  GraphKind kind_ = GraphKind::kComplete;
  std::vector<Vertex> table_;
  std::vector<std::uint8_t> residue_;
  std::vector<Vertex> residue_list_;
};

// Compressed sparse rows of an undirected simple graph with arbitrary degrees.
// Neighbor lists are sorted.
class SparseGraph {
 public:
  SparseGraph() : offsets_(1, 0) {}
  // Throws InputError on self-loops, duplicates, or out-of-range endpoints.
  static SparseGraph FromEdges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// Keyed Bernoulli(p) predicate on canonical edges: the answer for {u, v}
// depends only on (seed, min(u, v), max(u, v)).
class EdgeCoin {
 public:
  EdgeCoin(double p, std::uint64_t seed);

  bool operator()(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    return Mix64(key ^ seed_key_) < threshold_ || always_;
  }

  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

 private:
  double p_;
  std::uint64_t seed_;
  std::uint64_t seed_key_;
  std::uint64_t threshold_;
  bool always_;
};

// G_p: a retained subset of a host's edges, either drawn by an EdgeCoin or
// given explicitly. The retained adjacency is stored as a SparseGraph.
class PercolatedGraph {
 public:
  PercolatedGraph(std::shared_ptr<const RegularGraph> host, double p,
                  std::uint64_t seed);
  // Explicit retained set; every edge must be a host edge. p is reported as
  // the retained fraction of host edges.
  static PercolatedGraph FromRetainedEdges(
      std::shared_ptr<const RegularGraph> host, std::span<const Edge> retained);

  const RegularGraph& host() const { return *host_; }
  const std::shared_ptr<const RegularGraph>& host_ptr() const { return host_; }
  std::size_t n() const { return host_->n(); }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  bool keyed() const { return keyed_; }

  bool retained(Vertex u, Vertex v) const;
  // Sorted retained neighbors. Throws InputError when v >= n.
  std::span<const Vertex> neighbors(Vertex v) const;
  const SparseGraph& graph() const { return graph_; }
  std::size_t num_retained_edges() const { return graph_.num_edges(); }

 private:
  PercolatedGraph() = default;

  std::shared_ptr<const RegularGraph> host_;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  bool keyed_ = false;
  SparseGraph graph_;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  static VertexSet Range(std::size_t n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

struct SetStats {
  std::uint64_t internal_edges = 0;      // e(S)
  std::uint64_t boundary_edges = 0;      // |∂S|
  std::uint64_t external_neighbors = 0;  // |N(S)|
  bool is_connected = false;
};

// Exact statistics of S in g. Throws InputError for an empty set or
// out-of-range members.
SetStats set_stats(const SparseGraph& g, const VertexSet& s);
SetStats set_stats(const PercolatedGraph& g, const VertexSet& s);

// Components sorted by size descending, ties broken by smallest member.
struct ComponentCensus {
  std::vector<std::uint32_t> component_of;  // vertex -> index into sizes
  std::vector<std::size_t> sizes;
  std::vector<Vertex> representatives;  // smallest vertex of each component

  std::size_t count() const { return sizes.size(); }
  VertexSet members(std::size_t index) const;
};

ComponentCensus connected_components(const SparseGraph& g);
ComponentCensus connected_components(const PercolatedGraph& g);

// e(C) - |C| + 1 of a connected vertex set. Throws InputError when C is
// empty or does not induce a connected subgraph.
std::int64_t excess(const SparseGraph& g, const VertexSet& component);
std::int64_t excess(const PercolatedGraph& g, const VertexSet& component);

// Subgraph induced by `s`, relabelled to 0..|s|-1 in increasing parent order.
struct InducedSubgraph {
  SparseGraph graph;
  std::vector<Vertex> to_parent;

  VertexSet ToParent(std::span<const Vertex> local) const;
};

InducedSubgraph induce(const SparseGraph& g, const VertexSet& s);

// True when the subgraph induced by `members` is connected (false if empty).
bool induces_connected(const SparseGraph& g, std::span<const Vertex> members);

}  // namespace giantlab

#endif  // GIANTLAB_GRAPH_CORE_HPP_
