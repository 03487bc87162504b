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

// Audits of vertex and edge expansion inside the giant component, and of the
// supporting counting bounds (tree counts, high-degree mass, incident edges,
// poorly connected volume). Exhaustive modes are exact; sampled modes can only
// falsify, and report "no counterexample at N samples" otherwise.

#ifndef GIANTLAB_EXPANSION_AUDIT_HPP_
#define GIANTLAB_EXPANSION_AUDIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "giantlab/connected_sets.hpp"
#include "giantlab/graph_core.hpp"

namespace giantlab {

struct ExpansionConstants {
  double c1 = 1.0 / 40.0;
  double c2 = 1.0 / (400.0 * 400.0 * 6.0);
  double c3 = 1.0 / (400.0 * 400.0);
};

struct ExpansionThresholds {
  std::size_t n = 0;
  double epsilon = 0.0;
  double s_min = 0.0;  // 16 ln n / eps^2
  double s_mid = 0.0;  // eps^2 n / 50
  double s_max = 0.0;  // 12 eps n / 11
  double factor_connected = 0.0;  // c1 eps^2 / ln(1/eps)
  double factor_linear = 0.0;     // c2 eps^2 / ln^2(1/eps)
  double edge_factor = 0.0;       // c3 eps^2 / ln(1/eps)

  bool valid() const {
    return s_min < s_mid && s_mid < s_max && factor_connected > 0.0 &&
           factor_linear > 0.0 && edge_factor > 0.0;
  }
};

// Throws InputError unless 0 < eps < 1.
ExpansionThresholds expansion_thresholds(std::size_t n, double epsilon,
                                         const ExpansionConstants& constants = {});

enum class AuditMode { kExhaustive, kSampled };
enum class AuditBand { kConnected, kLinear };

std::string_view ModeName(AuditMode mode);
std::string_view BandName(AuditBand band);

// Inclusive size range.
struct SizeBand {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct SetRecord {
  VertexSet set;
  std::uint64_t internal_edges = 0;
  std::uint64_t boundary_edges = 0;
  std::uint64_t external_neighbors = 0;
  double ratio = 0.0;  // measured quantity / |S|
  bool violates = false;
};

struct AuditOptions {
  AuditMode mode = AuditMode::kSampled;
  AuditBand band = AuditBand::kConnected;
  std::optional<SizeBand> band_override;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kEnumerationBudget;
  std::size_t max_records = 64;
};

struct ExpansionReport {
  AuditMode mode = AuditMode::kSampled;
  AuditBand band = AuditBand::kConnected;
  bool edge = false;  // |boundary| instead of |N(S)|
  SizeBand sizes;     // after clipping to [1, |L1|]
  double factor = 0.0;
  bool band_empty = false;
  std::uint64_t sets_checked = 0;
  std::uint64_t violation_count = 0;
  // Minimum ratio; ties go to the smaller set, then the lexicographically
  // smaller one.
  std::optional<SetRecord> witness;
  std::vector<SetRecord> violations;  // first max_records, re-verified
};

// Connected band: connected S in L1 with s_min <= |S| <= s_mid, checking
// |N(S)| >= factor_connected |S|. Linear band: any S in L1 with
// s_mid <= |S| <= s_max, checking |N(S)| >= factor_linear |S|; sampled as
// unions of one to five disjoint connected pieces.
ExpansionReport vertex_expansion_audit(const PercolatedGraph& g,
                                       const ExpansionThresholds& t,
                                       const AuditOptions& options);

// As above with |boundary(S)| and edge_factor; the connected band spans
// [s_min, s_max].
ExpansionReport edge_expansion_audit(const PercolatedGraph& g,
                                     const ExpansionThresholds& t,
                                     const AuditOptions& options);

// Maximum matching between S and its outside neighbors, using retained edges
// only (the host supplies the candidate pairs).
std::size_t matching_lower_bound(const RegularGraph& host, const PercolatedGraph& g,
                                 const VertexSet& s);

struct HighDegreeMass {
  std::uint64_t mass = 0;     // sum of retained degrees above threshold
  std::size_t vertices = 0;
  double threshold = 0.0;     // 5 ln(1/eps)
  double ceiling = 0.0;       // n eps^{ln ln(1/eps)}
  bool within_ceiling = false;
};

// Requires 0 < eps < 1.
HighDegreeMass high_degree_mass(const PercolatedGraph& g, double epsilon);

struct IncidentEdgeReport {
  std::size_t min_size = 0;  // ceil(ln n)
  std::uint64_t sets_checked = 0;
  double max_ratio = 0.0;    // (e(S) + |boundary S|) / |S|
  std::optional<SetRecord> witness;
  std::uint64_t at_least_ten = 0;
  std::vector<SetRecord> violations;
};

// Random connected sets of uniform size in [ceil(ln n), |L1|]. Throws
// InputError when p > 2/d.
IncidentEdgeReport incident_edge_audit(const PercolatedGraph& g, std::size_t samples,
                                       std::uint64_t seed);

struct TreeCount {
  std::size_t k = 0;
  double bound = 0.0;  // n k^{k-2} d^{k-1} / k!
  std::optional<std::uint64_t> exact;
  bool within = true;
};

// Exact count of k-vertex subtrees (vertex set plus edge set) for n <= 12,
// bound only otherwise.
TreeCount tree_count_bound(const RegularGraph& host, std::size_t k);

struct BadVolume {
  double lo = 0.0;  // ln(1/eps) / (c eps^2)
  double hi = 0.0;  // 16 ln n / eps^2
  bool band_empty = false;
  AuditMode mode = AuditMode::kExhaustive;
  std::uint64_t candidates = 0;
  std::uint64_t poor_sets = 0;
  std::vector<VertexSet> packed;
  std::uint64_t volume = 0;  // total size of the packed family
  double ceiling = 0.0;      // 2 eps^3 n
};

struct BadVolumeOptions {
  double c = 1.0 / 70.0;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kEnumerationBudget;
};

// Greedy lower bound on the largest volume of vertex-disjoint connected
// proper subsets S of L1 in the size band with |boundary S| < c eps^2 |S| /
// ln(1/eps). Candidates are packed largest first.
BadVolume bad_volume(const PercolatedGraph& g, double epsilon,
                     const BadVolumeOptions& options = {});

}  // namespace giantlab

#endif  // GIANTLAB_EXPANSION_AUDIT_HPP_
