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

// Second-eigenvalue estimation, expander mixing lemma checks, and low-degree
// sets of a regular host.

#ifndef GIANTLAB_SPECTRAL_HPP_
#define GIANTLAB_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>

#include "giantlab/graph_core.hpp"

namespace giantlab {

struct SpectralOptions {
  double tol = 1e-6;  // relative change between iterates
  std::size_t max_iter = 10000;
  std::size_t restarts = 3;
  std::uint64_t seed = 0;
  std::size_t dense_limit = 64;  // dense eigensolve at or below this n
  bool force_iterative = false;
};

struct SpectralEstimate {
  double lambda_hat = 0.0;
  double ratio = 0.0;  // lambda_hat / d
  std::size_t iterations = 0;
  double residual = 0.0;
  bool certified = false;
  bool converged = false;
};

// lambda = max(|lambda_2|, |lambda_n|). Power iteration on A - (d/n)J; each
// iterate's norm ratio ||Mx||/||x|| is a lower bound on lambda.
SpectralEstimate estimate_lambda(const RegularGraph& g,
                                 const SpectralOptions& options = {});

struct EmlRecord {
  std::uint64_t observed = 0;  // e(A,B), ordered incidences
  double predicted = 0.0;      // d|A||B|/n
  double bound = 0.0;
  bool violated = false;
};

inline constexpr double kEmlSlack = 1e-9;

// e(A,B) counts edges with one end in A and the other in B; an edge inside
// A n B is counted twice. Throws InputError for empty A or B.
EmlRecord eml_discrepancy(const RegularGraph& g, double lambda,
                          const VertexSet& a, const VertexSet& b);

struct EmlAuditResult {
  double worst_ratio = 0.0;  // max |observed - predicted| / bound
  std::size_t pairs_checked = 0;
  std::size_t skipped_zero_bound = 0;
  std::size_t violations = 0;
  VertexSet worst_a;
  VertexSet worst_b;
};

// Every pair of nonempty subsets; n <= 12.
EmlAuditResult eml_exhaustive(const RegularGraph& g, double lambda);

// Random pairs of uniformly sized random subsets. Pairs with zero bound are
// skipped and counted.
EmlAuditResult eml_audit(const RegularGraph& g, double lambda,
                         std::size_t num_samples, std::uint64_t seed);

struct LowDegreeSet {
  VertexSet members;
  double threshold = 0.0;  // (1 - alpha)|A|d/n
  double ceiling = 0.0;    // delta^2 n / (alpha^2 beta), beta = |A|/n
  bool within_ceiling = false;
};

// Vertices outside A with at most `threshold` neighbors in A.
LowDegreeSet low_degree_set(const RegularGraph& g, double lambda,
                            const VertexSet& a, double alpha);

}  // namespace giantlab

#endif  // GIANTLAB_SPECTRAL_HPP_
