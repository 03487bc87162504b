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

// Supercritical percolation at p = (1 + eps)/d: the survival equation, the
// giant-component census, and the instrumented exploration process.

#ifndef GIANTLAB_PERCOLATION_HPP_
#define GIANTLAB_PERCOLATION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "giantlab/graph_core.hpp"

namespace giantlab {

// The unique y in (0, 1) with y e^{-y} = (1 + eps) e^{-(1 + eps)}.
double solve_y(double epsilon);
// 1 - y / (1 + eps).
double giant_fraction(double epsilon);

struct SupercriticalParams {
  double epsilon = 0.0;
  double p = 0.0;
  double delta_ceiling = 0.0;  // eps^4
  double y = 0.0;
  double giant_fraction = 0.0;
};

SupercriticalParams supercritical_params(double epsilon, std::size_t d);

// Throws InputError when (1 + eps)/d > 1.
PercolatedGraph percolate(std::shared_ptr<const RegularGraph> host, double epsilon,
                          std::uint64_t seed);

struct GiantCensus {
  std::size_t L1_size = 0;
  double L1_fraction = 0.0;
  std::size_t second_size = 0;
  double theory_fraction = 0.0;
  std::int64_t excess_L1 = 0;
  std::size_t num_components = 0;
  VertexSet L1;
};

GiantCensus giant_census(const PercolatedGraph& g, double epsilon);

struct BfsOptions {
  bool random_order = false;  // sigma uniform instead of identity
  std::uint64_t order_seed = 0;
  bool record_steps = true;
  // Query count at which the layered phase starts; default floor(3 eps n d / 4).
  std::optional<std::uint64_t> switch_step;
};

struct BfsComponent {
  std::uint64_t start = 0;  // query count when the root entered Q
  std::uint64_t end = 0;    // query count when Q emptied
  std::size_t size = 0;
};

struct LayeredPhase {
  bool switch_reached = false;  // the exploration made switch_step queries
  bool q_empty_at_switch = false;
  std::uint64_t switch_step = 0;
  std::size_t q0 = 0;              // |Q| minus its head at the switch
  double q0_threshold = 0.0;       // eps^2 n / 9
  bool q0_meets_threshold = false;
  std::vector<double> q;           // q_i = |Q_i| / n
  std::vector<double> n_cum;       // n_i = |Q_0 u ... u Q_i| / n
  double cutoff = 0.0;             // 7 eps^2 n / 90
  std::optional<std::size_t> cutoff_index;  // first i with |Q_i| <= cutoff
  std::size_t component_at_switch = 0;  // vertices of the current component in S u Q
  std::size_t discovered_at_cutoff = 0;
  std::size_t discovered_total = 0;
  double claim_size = 0.0;         // 11 eps n / 10
  bool exceeds_claim = false;      // discovered_at_cutoff > claim_size
};

struct BfsTrace {
  std::size_t n = 0;
  std::size_t d = 0;
  double epsilon = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
  // One row per query: sizes after the query is answered.
  std::vector<std::uint32_t> s_size, q_size, t_size;
  std::uint64_t queries = 0;
  std::uint64_t positives = 0;
  std::vector<std::uint64_t> queue_empty_at;
  std::vector<BfsComponent> components;
  double interval_lo = 0.0;  // eps^2 n d / 20
  double interval_hi = 0.0;  // 3 eps n d / 4
  bool emptied_in_interval = false;
  LayeredPhase layered;
};

// Breadth-first exploration answering each query with the keyed coin of the
// queried edge, so the discovered components are exactly those of
// percolate(host, epsilon, seed).
BfsTrace randomized_bfs(const RegularGraph& host, double epsilon, std::uint64_t seed,
                        const BfsOptions& options = {});

}  // namespace giantlab

#endif  // GIANTLAB_PERCOLATION_HPP_
