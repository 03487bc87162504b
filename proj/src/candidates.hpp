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

// Candidate-set machinery shared by the expansion, extraction, and
// conductance searches: incremental set statistics, sweep orders, and balls.

#ifndef GIANTLAB_SRC_CANDIDATES_HPP_
#define GIANTLAB_SRC_CANDIDATES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "giantlab/graph_core.hpp"

namespace giantlab::internal {

// Statistics of a growing vertex set, updated in O(deg) per added vertex.
class SetTracker {
 public:
  explicit SetTracker(const SparseGraph& g);

  void Add(Vertex v);
  // Removals must undo additions in reverse order.
  void Remove(Vertex v);
  void Clear();

  std::size_t size() const { return members_.size(); }
  std::uint64_t internal_edges() const { return internal_; }
  std::uint64_t boundary_edges() const { return boundary_; }
  std::uint64_t external_neighbors() const { return external_; }
  std::uint64_t volume() const { return 2 * internal_ + boundary_; }
  bool contains(Vertex v) const { return in_[v] != 0; }
  std::span<const Vertex> members() const { return members_; }

 private:
  const SparseGraph& g_;
  std::vector<std::uint8_t> in_;
  std::vector<std::uint32_t> into_;  // neighbors inside the set
  std::vector<Vertex> members_;
  std::vector<Vertex> touched_;
  std::uint64_t internal_ = 0, boundary_ = 0, external_ = 0;
};

// Vertices ordered by an approximate second eigenvector of the normalized
// adjacency, scaled by deg^{-1/2}. Isolated vertices go last.
std::vector<Vertex> SweepOrder(const SparseGraph& g, std::uint64_t seed,
                               std::size_t iterations = 300);

// BFS order from v and the index ranges of each radius: ball r is
// order[0 .. ends[r]).
struct BallLayers {
  std::vector<Vertex> order;
  std::vector<std::size_t> ends;
};

BallLayers Balls(const SparseGraph& g, Vertex v, std::size_t max_radius);

// Lexicographic comparison of two sorted sets.
bool LexLess(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace giantlab::internal

#endif  // GIANTLAB_SRC_CANDIDATES_HPP_
