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

// Exhaustive enumeration and random growth of connected vertex sets.

#ifndef GIANTLAB_CONNECTED_SETS_HPP_
#define GIANTLAB_CONNECTED_SETS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "giantlab/graph_core.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

// Receives each set sorted ascending. The span is only valid during the call.
using SetVisitor = std::function<void(std::span<const Vertex>)>;

// Number of connected vertex sets of size 1..k_max. Throws BudgetExceeded as
// soon as the count passes `budget`.
std::uint64_t count_connected_subsets(const SparseGraph& g, std::size_t k_max,
                                      std::uint64_t budget = kEnumerationBudget);

// Visits every connected vertex set of size 1..k_max exactly once (ESU
// enumeration). Counts first, so BudgetExceeded is thrown before any visit.
void enumerate_connected_subsets(const SparseGraph& g, std::size_t k_max,
                                 const SetVisitor& visit,
                                 std::uint64_t budget = kEnumerationBudget);

std::vector<VertexSet> enumerate_connected_subsets(
    const PercolatedGraph& g, std::size_t k_max,
    std::uint64_t budget = kEnumerationBudget);

// Grows connected sets by repeatedly adding a uniform vertex of the current
// outer boundary. Not uniform over connected sets.
class SetGrower {
 public:
  explicit SetGrower(const SparseGraph& g);

  // Set of size min(k, |component of start|) containing `start`.
  VertexSet Grow(Vertex start, std::size_t k, Rng& rng);
  // Same, avoiding vertices with blocked[v] != 0.
  VertexSet Grow(Vertex start, std::size_t k, Rng& rng,
                 const std::vector<std::uint8_t>& blocked);

 private:
  const SparseGraph& g_;
  std::vector<std::uint8_t> mark_;
  std::vector<Vertex> touched_;
};

// `count` random connected k-sets inside the largest component, each from a
// uniform start vertex there; sample i uses DeriveSeed(seed, i). Throws
// InputError when k is 0 or exceeds the largest component.
std::vector<VertexSet> sample_connected_subsets(const PercolatedGraph& g,
                                                std::size_t k, std::size_t count,
                                                std::uint64_t seed);

}  // namespace giantlab

#endif  // GIANTLAB_CONNECTED_SETS_HPP_
