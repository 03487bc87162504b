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

// Distances, lazy random walks, and conductance on a connected component,
// given as its own SparseGraph (see induce()).

#ifndef GIANTLAB_METRICS_HPP_
#define GIANTLAB_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "giantlab/connected_sets.hpp"
#include "giantlab/expansion_audit.hpp"
#include "giantlab/graph_core.hpp"

namespace giantlab {

// Throws InputError if g is empty or disconnected.
std::size_t diameter_exact(const SparseGraph& g);

struct DoubleSweep {
  std::size_t lower_bound = 0;
  Vertex from = 0;  // farthest vertex from the random start
  Vertex to = 0;    // farthest vertex from `from`
};

DoubleSweep double_sweep(const SparseGraph& g, std::uint64_t seed);

// |B(v, r)| for r = 0..r_max.
std::vector<std::size_t> ball_growth(const SparseGraph& g, Vertex v, std::size_t r_max);

struct GrowthStep {
  std::size_t r = 0;
  std::size_t ball = 0;  // |B(v, r)|
  std::size_t next = 0;  // |B(v, r + 1)|
  double factor = 0.0;   // next / ball
  std::optional<AuditBand> band;
  double required = 1.0;  // 1 + band factor; 1 outside both bands
  bool pass = true;
};

// Growth factors checked against 1 + factor_connected while |B| is in
// [s_min, s_mid] and 1 + factor_linear while it is in [s_mid, s_max].
std::vector<GrowthStep> growth_audit(const SparseGraph& g, Vertex v,
                                     const ExpansionThresholds& t, std::size_t r_max);

// Stationary distribution deg(v) / 2e.
std::vector<double> stationary_distribution(const SparseGraph& g);

std::vector<double> lazy_step(const SparseGraph& g, std::span<const double> dist);

// Throws InputError on mismatched lengths.
double tv_distance(std::span<const double> a, std::span<const double> b);

inline constexpr std::size_t kAllStartsLimit = 5000;

struct StartMode {
  bool all = true;
  std::size_t count = 0;  // sampled starts
  std::uint64_t seed = 0;
};

struct MixingResult {
  std::size_t t_mix = 0;
  std::vector<double> d;  // d(t), t = 0..t_mix
  std::size_t starts = 0;
  bool lower_bound = false;  // sampled starts only bound d(t) from below
};

// min{t : max_v d_TV(P^t(v, .), pi) <= 1/4}. All-starts mode throws
// BudgetExceeded above kAllStartsLimit vertices; both modes throw it when
// t_mix would exceed max_steps.
MixingResult mixing_time_exact(const SparseGraph& g, const StartMode& mode,
                               std::size_t max_steps = 1'000'000);

struct Conductance {
  double pi_S = 0.0;
  double Q_S = 0.0;
  double phi_S = 0.0;
};

// Throws InputError if S is empty or all of g.
Conductance conductance(const SparseGraph& g, const VertexSet& s);

struct ProfileBand {
  std::size_t j = 0;
  double lo = 0.0;  // 2^{-j-1}
  double hi = 0.0;  // 2^{-j}
  double phi = 1.0;
  bool found = false;  // false: no connected set seen in the band, phi = 1
  VertexSet witness;
};

struct ConductanceProfile {
  std::vector<ProfileBand> bands;
  double pi_min = 0.0;
  double fr_sum = 0.0;  // sum of phi^{-2} over bands, constant taken as 1
  AuditMode mode = AuditMode::kExhaustive;
  std::uint64_t candidates = 0;
  std::optional<std::size_t> exact_tmix;
};

// Exhaustive over connected sets for at most 26 vertices (and within the
// enumeration budget); otherwise sweep prefixes, balls, and grown sets.
ConductanceProfile conductance_profile(const SparseGraph& g, std::size_t samples,
                                       std::uint64_t seed,
                                       std::uint64_t budget = kEnumerationBudget);

struct MassAuditReport {
  double mass_threshold = 0.0;  // 160 ln n / eps^2
  double size_threshold = 0.0;  // 16 ln n / eps^2
  std::uint64_t sets_checked = 0;
  std::uint64_t violation_count = 0;
  std::optional<SetRecord> witness;  // first violation found
};

// Connected sets whose incident-edge mass e(S) + |boundary S| reaches the
// mass threshold must have at least size_threshold vertices. n is the host
// vertex count.
MassAuditReport small_set_mass_audit(const SparseGraph& g, std::size_t n, double epsilon,
                                     std::size_t samples, std::uint64_t seed);

struct PhiFloorReport {
  double pi_lo = 0.0;  // C ln n / (eps^3 n)
  double floor = 0.0;  // c eps^2 / ln(1/eps)
  std::uint64_t sets_checked = 0;
  std::uint64_t violation_count = 0;
  std::optional<SetRecord> witness;  // smallest conductance found in range
  double min_phi = 0.0;
};

// Connected sets with pi_lo <= pi(S) <= 1/2 should have conductance at least
// `floor`.
PhiFloorReport phi_floor_audit(const SparseGraph& g, std::size_t n, double epsilon,
                               double big_c, double small_c, std::size_t samples,
                               std::uint64_t seed);

}  // namespace giantlab

#endif  // GIANTLAB_METRICS_HPP_
