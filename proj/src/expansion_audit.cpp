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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "candidates.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

using internal::SetTracker;

void CheckSmallEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
}

// Candidate with exact counts, in local ids of the induced giant.
struct Scored {
  std::vector<Vertex> members;
  std::uint64_t internal = 0, boundary = 0, external = 0;
  std::uint64_t measure = 0;
};

Scored Score(const SetTracker& t, bool edge) {
  Scored s;
  s.members.assign(t.members().begin(), t.members().end());
  std::sort(s.members.begin(), s.members.end());
  s.internal = t.internal_edges();
  s.boundary = t.boundary_edges();
  s.external = t.external_neighbors();
  s.measure = edge ? s.boundary : s.external;
  return s;
}

Scored ScoreSet(SetTracker& t, std::span<const Vertex> members, bool edge) {
  t.Clear();
  for (Vertex v : members) t.Add(v);
  return Score(t, edge);
}

// a.measure/|a| < b.measure/|b|, then smaller size, then lexicographic.
bool Better(const Scored& a, const Scored& b) {
  const auto lhs = static_cast<unsigned __int128>(a.measure) * b.members.size();
  const auto rhs = static_cast<unsigned __int128>(b.measure) * a.members.size();
  if (lhs != rhs) return lhs < rhs;
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return internal::LexLess(a.members, b.members);
}

class Reducer {
 public:
  Reducer(const InducedSubgraph& giant, const PercolatedGraph& g, bool edge,
          double factor, std::size_t max_records, ExpansionReport& report)
      : giant_(giant), g_(g), edge_(edge), factor_(factor), max_records_(max_records),
        report_(report) {}

  void Take(Scored s) {
    ++report_.sets_checked;
    const double size = static_cast<double>(s.members.size());
    const bool violates = static_cast<double>(s.measure) < factor_ * size;
    if (violates) {
      ++report_.violation_count;
      if (report_.violations.size() < max_records_) {
        report_.violations.push_back(Record(s, true));
      }
    }
    if (!best_ || Better(s, *best_)) best_ = std::move(s);
  }

  void Finish() {
    if (best_) {
      report_.witness = Record(*best_, static_cast<double>(best_->measure) <
                                           factor_ * static_cast<double>(best_->members.size()));
    }
    // Violations are counterexamples, so re-derive their counts from scratch.
    for (const SetRecord& r : report_.violations) {
      const SetStats stats = set_stats(g_, r.set);
      const std::uint64_t measure = edge_ ? stats.boundary_edges : stats.external_neighbors;
      if (measure != (edge_ ? r.boundary_edges : r.external_neighbors)) {
        throw std::logic_error("expansion audit: violation failed re-verification");
      }
    }
  }

 private:
  SetRecord Record(const Scored& s, bool violates) const {
    SetRecord r;
    r.set = giant_.ToParent(s.members);
    r.internal_edges = s.internal;
    r.boundary_edges = s.boundary;
    r.external_neighbors = s.external;
    r.ratio = static_cast<double>(s.measure) / static_cast<double>(s.members.size());
    r.violates = violates;
    return r;
  }

  const InducedSubgraph& giant_;
  const PercolatedGraph& g_;
  bool edge_;
  double factor_;
  std::size_t max_records_;
  ExpansionReport& report_;
  std::optional<Scored> best_;
};

double SumBinomials(std::size_t m, std::size_t lo, std::size_t hi) {
  double total = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) {
    total += std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0));
  }
  return total;
}

// All subsets of size in [lo, hi], in lexicographic order of sorted members.
void EnumerateAllSubsets(const SparseGraph& h, std::size_t lo, std::size_t hi, bool edge,
                         Reducer& reducer) {
  const std::size_t m = h.num_vertices();
  SetTracker t(h);
  std::vector<Vertex> next_pick{0};  // stack of next candidate per depth
  // Iterative DFS over increasing sequences.
  std::vector<Vertex> chosen;
  while (true) {
    Vertex& cand = next_pick.back();
    if (chosen.size() < hi && cand < m) {
      const Vertex v = cand++;
      chosen.push_back(v);
      t.Add(v);
      if (chosen.size() >= lo) reducer.Take(Score(t, edge));
      next_pick.push_back(v + 1);
      continue;
    }
    next_pick.pop_back();
    if (chosen.empty()) break;
    t.Remove(chosen.back());
    chosen.pop_back();
  }
}

// One sampled candidate set in local ids, or empty if the draw fell outside
// the band.
std::vector<Vertex> DrawCandidate(const SparseGraph& h, SetGrower& grower, AuditBand band,
                                  std::size_t lo, std::size_t hi, Rng& rng) {
  const std::size_t m = h.num_vertices();
  std::uniform_int_distribution<std::size_t> size_dist(lo, hi);
  std::uniform_int_distribution<Vertex> vertex_dist(0, static_cast<Vertex>(m - 1));
  const std::size_t k = size_dist(rng);
  if (band == AuditBand::kConnected) {
    const VertexSet s = grower.Grow(vertex_dist(rng), k, rng);
    return {s.begin(), s.end()};
  }
  std::uniform_int_distribution<std::size_t> pieces_dist(1, std::min<std::size_t>(5, k));
  const std::size_t pieces = pieces_dist(rng);
  std::vector<std::size_t> cuts{0, k};
  while (cuts.size() < pieces + 1) {
    std::uniform_int_distribution<std::size_t> cut_dist(1, k - 1);
    const std::size_t c = cut_dist(rng);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint8_t> blocked(m, 0);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Vertex start = vertex_dist(rng);
    for (int tries = 0; blocked[start] && tries < 32; ++tries) start = vertex_dist(rng);
    if (blocked[start]) break;
    const VertexSet piece = grower.Grow(start, cuts[i + 1] - cuts[i], rng, blocked);
    for (Vertex v : piece) {
      blocked[v] = 1;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExpansionReport RunAudit(const PercolatedGraph& g, bool edge, double lo_real,
                         double hi_real, double factor, const AuditOptions& opt) {
  ExpansionReport report;
  report.mode = opt.mode;
  report.band = opt.band;
  report.edge = edge;
  report.factor = factor;

  const ComponentCensus census = connected_components(g);
  const VertexSet l1 = census.members(0);
  const InducedSubgraph giant = induce(g.graph(), l1);
  const SparseGraph& h = giant.graph;

  std::size_t lo, hi;
  if (opt.band_override) {
    lo = opt.band_override->lo;
    hi = opt.band_override->hi;
  } else {
    lo = static_cast<std::size_t>(std::max(1.0, std::ceil(lo_real)));
    hi = hi_real < 1.0 ? 0 : static_cast<std::size_t>(std::floor(hi_real));
  }
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min(hi, l1.size());
  report.sizes = {lo, hi};
  if (lo > hi) {
    report.band_empty = true;
    return report;
  }

  Reducer reducer(giant, g, edge, factor, opt.max_records, report);
  if (opt.mode == AuditMode::kExhaustive) {
    if (opt.band == AuditBand::kConnected) {
      SetTracker t(h);
      enumerate_connected_subsets(
          h, hi,
          [&](std::span<const Vertex> s) {
            if (s.size() >= lo) reducer.Take(ScoreSet(t, s, edge));
          },
          opt.budget);
    } else {
      if (SumBinomials(h.num_vertices(), lo, hi) > static_cast<double>(opt.budget)) {
        throw BudgetExceeded("linear band has more than " + std::to_string(opt.budget) +
                             " subsets; use sampling");
      }
      EnumerateAllSubsets(h, lo, hi, edge, reducer);
    }
  } else {
    std::vector<std::optional<Scored>> drawn(opt.samples);
#pragma omp parallel
    {
      SetTracker t(h);
      SetGrower grower(h);
#pragma omp for schedule(dynamic, 16)
      for (std::size_t i = 0; i < opt.samples; ++i) {
        Rng rng(DeriveSeed(opt.seed, i));
        const std::vector<Vertex> s = DrawCandidate(h, grower, opt.band, lo, hi, rng);
        if (s.size() >= lo && s.size() <= hi) drawn[i] = ScoreSet(t, s, edge);
      }
    }
    for (auto& s : drawn) {
      if (s) reducer.Take(std::move(*s));
    }
  }
  reducer.Finish();
  return report;
}

// Determinant of an integer matrix by fraction-free elimination.
__int128 BareissDeterminant(std::vector<std::vector<__int128>> m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

// Spanning trees of g[s] by the matrix-tree theorem.
std::uint64_t SpanningTrees(const SparseGraph& g, std::span<const Vertex> s) {
  const std::size_t k = s.size();
  std::vector<std::vector<__int128>> lap(k - 1, std::vector<__int128>(k - 1, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !g.has_edge(s[i], s[j])) continue;
      ++lap[i][i];
      if (j + 1 < k) lap[i][j] = -1;
    }
  }
  return static_cast<std::uint64_t>(BareissDeterminant(std::move(lap)));
}

}  // namespace

std::string_view ModeName(AuditMode mode) {
  return mode == AuditMode::kExhaustive ? "exhaustive" : "sampled";
}

std::string_view BandName(AuditBand band) {
  return band == AuditBand::kConnected ? "connected" : "linear";
}

ExpansionThresholds expansion_thresholds(std::size_t n, double epsilon,
                                         const ExpansionConstants& c) {
  CheckSmallEpsilon(epsilon);
  const double e2 = epsilon * epsilon;
  const double nn = static_cast<double>(n);
  const double log_inv = std::log(1.0 / epsilon);
  ExpansionThresholds t;
  t.n = n;
  t.epsilon = epsilon;
  t.s_min = 16.0 * std::log(nn) / e2;
  t.s_mid = e2 * nn / 50.0;
  t.s_max = 12.0 * epsilon * nn / 11.0;
  t.factor_connected = c.c1 * e2 / log_inv;
  t.factor_linear = c.c2 * e2 / (log_inv * log_inv);
  t.edge_factor = c.c3 * e2 / log_inv;
  return t;
}

ExpansionReport vertex_expansion_audit(const PercolatedGraph& g, const ExpansionThresholds& t,
                                       const AuditOptions& options) {
  if (options.band == AuditBand::kConnected) {
    return RunAudit(g, false, t.s_min, t.s_mid, t.factor_connected, options);
  }
  return RunAudit(g, false, t.s_mid, t.s_max, t.factor_linear, options);
}

ExpansionReport edge_expansion_audit(const PercolatedGraph& g, const ExpansionThresholds& t,
                                     const AuditOptions& options) {
  if (options.band == AuditBand::kConnected) {
    return RunAudit(g, true, t.s_min, t.s_max, t.edge_factor, options);
  }
  return RunAudit(g, true, t.s_mid, t.s_max, t.edge_factor, options);
}

std::size_t matching_lower_bound(const RegularGraph& host, const PercolatedGraph& g,
                                 const VertexSet& s) {
  if (s.empty()) throw InputError("matching_lower_bound needs a nonempty set");
  const std::size_t n = g.n();
  std::vector<std::uint8_t> in_s(n, 0);
  for (Vertex v : s) {
    if (v >= n) throw InputError("vertex out of range");
    in_s[v] = 1;
  }
  // Left side S, right side the outside host neighbors; an edge of the
  // auxiliary graph is a retained host edge.
  std::vector<std::vector<Vertex>> right(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex u : g.neighbors(s[i])) {
      if (!in_s[u] && host.adjacent(s[i], u)) right[i].push_back(u);
    }
  }
  constexpr std::uint32_t kFree = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(n, kFree);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  std::size_t matched = 0;
  struct Frame {
    std::uint32_t left;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::uint32_t root = 0; root < s.size(); ++root) {
    ++round;
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& nbrs = right[top.left];
      if (top.next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[top.next++];
      if (stamp[w] == round) continue;
      stamp[w] = round;
      if (owner[w] == kFree) {
        // Augment: each frame takes the vertex it last tried.
        for (const Frame& f : stack) owner[right[f.left][f.next - 1]] = f.left;
        ++matched;
        break;
      }
      stack.push_back({owner[w], 0});
    }
  }
  return matched;
}

HighDegreeMass high_degree_mass(const PercolatedGraph& g, double epsilon) {
  CheckSmallEpsilon(epsilon);
  HighDegreeMass out;
  const double log_inv = std::log(1.0 / epsilon);
  out.threshold = 5.0 * log_inv;
  out.ceiling = static_cast<double>(g.n()) * std::pow(epsilon, std::log(log_inv));
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::size_t deg = g.graph().degree(v);
    if (static_cast<double>(deg) > out.threshold) {
      out.mass += deg;
      ++out.vertices;
    }
  }
  out.within_ceiling = static_cast<double>(out.mass) <= out.ceiling;
  return out;
}

IncidentEdgeReport incident_edge_audit(const PercolatedGraph& g, std::size_t samples,
                                       std::uint64_t seed) {
  const double d = static_cast<double>(g.host().d());
  if (g.p() > 2.0 / d * (1.0 + 1e-12)) {
    throw InputError("incident_edge_audit needs p <= 2/d");
  }
  IncidentEdgeReport out;
  out.min_size = static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(g.n()))));
  out.min_size = std::max<std::size_t>(out.min_size, 1);
  const ComponentCensus census = connected_components(g);
  const VertexSet l1 = census.members(0);
  if (l1.size() < out.min_size) return out;

  const SparseGraph& graph = g.graph();
  std::vector<Scored> drawn(samples);
#pragma omp parallel
  {
    SetTracker t(graph);
    SetGrower grower(graph);
#pragma omp for schedule(dynamic, 16)
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng(DeriveSeed(seed, i));
      std::uniform_int_distribution<std::size_t> size_dist(out.min_size, l1.size());
      std::uniform_int_distribution<std::size_t> start_dist(0, l1.size() - 1);
      const std::size_t k = size_dist(rng);
      const VertexSet s = grower.Grow(l1[start_dist(rng)], k, rng);
      drawn[i] = ScoreSet(t, s.members(), true);
      drawn[i].measure = drawn[i].internal + drawn[i].boundary;
    }
  }
  for (Scored& s : drawn) {
    ++out.sets_checked;
    const double ratio = static_cast<double>(s.measure) / static_cast<double>(s.members.size());
    SetRecord r;
    r.set = VertexSet(s.members);
    r.internal_edges = s.internal;
    r.boundary_edges = s.boundary;
    r.external_neighbors = s.external;
    r.ratio = ratio;
    r.violates = ratio >= 10.0;
    if (r.violates) {
      ++out.at_least_ten;
      if (out.violations.size() < 64) out.violations.push_back(r);
    }
    if (!out.witness || ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.witness = std::move(r);
    }
  }
  return out;
}

TreeCount tree_count_bound(const RegularGraph& host, std::size_t k) {
  if (k == 0) throw InputError("tree size must be positive");
  TreeCount out;
  out.k = k;
  const long double n = static_cast<long double>(host.n());
  const long double kk = static_cast<long double>(k);
  const long double d = static_cast<long double>(host.d());
  long double factorial = 1.0L;
  for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<long double>(i);
  out.bound = static_cast<double>(n * std::pow(kk, kk - 2.0L) *
                                  std::pow(d, kk - 1.0L) / factorial);
  if (host.n() > 12 || k > host.n()) {
    if (k > host.n()) {
      out.exact = 0;
      out.within = true;
    }
    return out;
  }
  const SparseGraph g = SparseGraph::FromEdges(host.n(), host.edges());
  std::uint64_t total = 0;
  enumerate_connected_subsets(g, k, [&](std::span<const Vertex> s) {
    if (s.size() == k) total += SpanningTrees(g, s);
  });
  out.exact = total;
  // The bound is an integer-valued rational; allow for rounding in it.
  out.within = static_cast<double>(total) <= out.bound * (1.0 + 1e-12);
  return out;
}

BadVolume bad_volume(const PercolatedGraph& g, double epsilon, const BadVolumeOptions& opt) {
  CheckSmallEpsilon(epsilon);
  if (!(opt.c > 0.0)) throw InputError("bad_volume needs c > 0");
  BadVolume out;
  const double e2 = epsilon * epsilon;
  const double log_inv = std::log(1.0 / epsilon);
  const double nn = static_cast<double>(g.n());
  out.lo = log_inv / (opt.c * e2);
  out.hi = 16.0 * std::log(nn) / e2;
  out.ceiling = 2.0 * e2 * epsilon * nn;
  const double poor_factor = opt.c * e2 / log_inv;

  const ComponentCensus census = connected_components(g);
  const VertexSet l1 = census.members(0);
  const InducedSubgraph giant = induce(g.graph(), l1);
  const SparseGraph& h = giant.graph;
  const std::size_t lo = static_cast<std::size_t>(std::max(1.0, std::ceil(out.lo)));
  std::size_t hi = static_cast<std::size_t>(std::max(0.0, std::floor(out.hi)));
  hi = std::min(hi, l1.size() - 1);  // proper subsets only
  if (lo > hi) {
    out.band_empty = true;
    return out;
  }

  std::vector<std::vector<Vertex>> poor;
  SetTracker t(h);
  auto consider = [&](std::span<const Vertex> s) {
    if (s.size() < lo || s.size() > hi) return;
    ++out.candidates;
    const Scored sc = ScoreSet(t, s, true);
    if (static_cast<double>(sc.boundary) < poor_factor * static_cast<double>(s.size())) {
      poor.push_back(sc.members);
    }
  };

  bool exhaustive = true;
  try {
    count_connected_subsets(h, hi, opt.budget);
  } catch (const BudgetExceeded&) {
    exhaustive = false;
  }
  if (exhaustive) {
    out.mode = AuditMode::kExhaustive;
    enumerate_connected_subsets(h, hi, consider, opt.budget);
  } else {
    out.mode = AuditMode::kSampled;
    std::vector<Vertex> buf;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      const internal::BallLayers balls = internal::Balls(h, v, 3);
      for (std::size_t end : balls.ends) {
        buf.assign(balls.order.begin(), balls.order.begin() + static_cast<std::ptrdiff_t>(end));
        std::sort(buf.begin(), buf.end());
        consider(buf);
      }
    }
    const std::vector<Vertex> order = internal::SweepOrder(h, opt.seed);
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t len = lo; len <= hi; ++len) {
        if (dir == 0) {
          buf.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
        } else {
          buf.assign(order.end() - static_cast<std::ptrdiff_t>(len), order.end());
        }
        std::sort(buf.begin(), buf.end());
        if (induces_connected(h, buf)) consider(buf);
      }
    }
    SetGrower grower(h);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      Rng rng(DeriveSeed(opt.seed, i));
      std::uniform_int_distribution<std::size_t> size_dist(lo, hi);
      std::uniform_int_distribution<Vertex> start_dist(
          0, static_cast<Vertex>(h.num_vertices() - 1));
      const std::size_t k = size_dist(rng);
      const VertexSet s = grower.Grow(start_dist(rng), k, rng);
      consider(s.members());
    }
  }

  std::sort(poor.begin(), poor.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return internal::LexLess(a, b);
  });
  poor.erase(std::unique(poor.begin(), poor.end()), poor.end());
  out.poor_sets = poor.size();
  std::vector<std::uint8_t> used(h.num_vertices(), 0);
  for (const auto& s : poor) {
    if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : s) used[v] = 1;
    out.volume += s.size();
    out.packed.push_back(giant.ToParent(s));
  }
  return out;
}

}  // namespace giantlab
