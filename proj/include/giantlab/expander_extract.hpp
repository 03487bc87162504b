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

// Peeling poorly expanding sets off the giant component until the remainder
// has no violator the search can find.

#ifndef GIANTLAB_EXPANDER_EXTRACT_HPP_
#define GIANTLAB_EXPANDER_EXTRACT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "giantlab/graph_core.hpp"

namespace giantlab {

inline constexpr std::size_t kExhaustiveVertexLimit = 26;

// S violates `factor` in H when |S| <= |V(H)|/2 and |N_H(S)| < factor |S|.
struct Violator {
  VertexSet set;  // ids of the graph the search ran on
  std::size_t neighbors = 0;
  double ratio = 0.0;
  std::string_view stage;  // "exhaustive", "sweep", "ball", "sample"
};

struct SearchOptions {
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  std::size_t exhaustive_limit = kExhaustiveVertexLimit;
};

// Exhaustive (over all subsets) when H has at most exhaustive_limit vertices,
// returning the minimum ratio with ties to the larger set, then the
// lexicographically smaller one. Otherwise the first violator found by sweep
// cuts, then balls of radius <= 3, then sampled connected sets.
std::optional<Violator> find_violator(const SparseGraph& h, double factor,
                                      const SearchOptions& options = {});

struct PeelStep {
  VertexSet removed;
  std::size_t neighbors = 0;  // |N_{L1'}(S)| at removal time
  double ratio = 0.0;
  std::string_view stage;
};

struct PeelState {
  VertexSet L1;
  VertexSet M;
  VertexSet L1_prime;
  std::vector<PeelStep> history;
  bool budget_exceeded = false;
  double target_factor = 0.0;
  double budget = 0.0;      // eps n / 6
  double size_claim = 0.0;  // 7 eps n / 4
  bool size_claim_met = false;
};

struct ExtractOptions {
  SearchOptions search;
  std::optional<double> budget_override;
};

// Default target factor c2 eps^2 / ln^2(1/eps) with the expansion defaults.
double default_target_factor(double epsilon);

// Throws InputError when g has no edges (empty giant).
PeelState extract_expander(const PercolatedGraph& g, double epsilon, double target_factor,
                           const ExtractOptions& options = {});

enum class VerdictKind { kCertified, kCounterexample, kNoCounterexample };
std::string_view VerdictName(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::kNoCounterexample;
  std::optional<Violator> counterexample;
  std::size_t samples = 0;
};

// Exhaustive mode certifies graphs up to kExhaustiveVertexLimit vertices and
// throws BudgetExceeded beyond that; sampled mode only falsifies.
Verdict verify_expander(const SparseGraph& h, double factor, bool exhaustive,
                        std::size_t samples, std::uint64_t seed);

}  // namespace giantlab

#endif  // GIANTLAB_EXPANDER_EXTRACT_HPP_
