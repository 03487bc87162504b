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

#include "giantlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "candidates.hpp"
#include "giantlab/kernels.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

void CheckConnected(const SparseGraph& g) {
  if (g.num_vertices() == 0) throw InputError("empty graph");
  if (connected_components(g).count() != 1) throw InputError("graph is not connected");
}

// Farthest vertex from s (smallest id on ties) and its distance.
std::pair<Vertex, std::uint32_t> Farthest(const SparseGraph& g, Vertex s) {
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnseen);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex u : g.neighbors(queue[head])) {
      if (dist[u] == kUnseen) {
        dist[u] = dist[queue[head]] + 1;
        queue.push_back(u);
      }
    }
  }
  Vertex best = s;
  for (Vertex v : queue) {
    if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
  }
  return {best, dist[best]};
}

// Phi(S) = boundary * e / (vol (2e - vol)), kept as a fraction.
struct Phi {
  std::uint64_t num = 0;
  unsigned __int128 den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<(const Phi& o) const {
    return static_cast<unsigned __int128>(num) * o.den <
           static_cast<unsigned __int128>(o.num) * den;
  }
};

Phi MakePhi(std::uint64_t boundary, std::uint64_t volume, std::uint64_t edges) {
  Phi p;
  p.num = boundary * edges;
  p.den = static_cast<unsigned __int128>(volume) * (2 * edges - volume);
  return p;
}

// Band j holds pi(S) = vol / 2e in [2^{-j-1}, 2^{-j}].
bool InBand(std::uint64_t volume, std::uint64_t two_e, std::size_t j) {
  const unsigned __int128 v = volume;
  return (v << (j + 1)) >= two_e && (v << j) <= two_e;
}

SetRecord RecordOf(const internal::SetTracker& t, double ratio, bool violates) {
  SetRecord r;
  r.set = VertexSet(std::vector<Vertex>(t.members().begin(), t.members().end()));
  r.internal_edges = t.internal_edges();
  r.boundary_edges = t.boundary_edges();
  r.external_neighbors = t.external_neighbors();
  r.ratio = ratio;
  r.violates = violates;
  return r;
}

// Grows a random connected set from a uniform start and calls f after each
// added vertex; stops when f returns false or `max_size` is reached.
template <typename F>
void GrowChain(const SparseGraph& g, internal::SetTracker& t, Rng& rng,
               std::size_t max_size, F&& f) {
  const std::size_t m = g.num_vertices();
  std::uniform_int_distribution<Vertex> start_dist(0, static_cast<Vertex>(m - 1));
  std::vector<Vertex> frontier;
  std::vector<std::uint8_t> on_frontier(m, 0);
  t.Clear();
  auto add = [&](Vertex v) {
    t.Add(v);
    for (Vertex u : g.neighbors(v)) {
      if (!t.contains(u) && !on_frontier[u]) {
        on_frontier[u] = 1;
        frontier.push_back(u);
      }
    }
  };
  add(start_dist(rng));
  if (!f(t)) return;
  while (t.size() < max_size && !frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    add(v);
    if (!f(t)) return;
  }
}

}  // namespace

std::size_t diameter_exact(const SparseGraph& g) {
  CheckConnected(g);
  const std::vector<std::uint32_t> ecc = kernels::EccentricitiesParallel(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

DoubleSweep double_sweep(const SparseGraph& g, std::uint64_t seed) {
  if (g.num_vertices() == 0) throw InputError("empty graph");
  Rng rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.num_vertices() - 1));
  DoubleSweep out;
  out.from = Farthest(g, pick(rng)).first;
  const auto [to, dist] = Farthest(g, out.from);
  out.to = to;
  out.lower_bound = dist;
  return out;
}

std::vector<std::size_t> ball_growth(const SparseGraph& g, Vertex v, std::size_t r_max) {
  if (v >= g.num_vertices()) throw InputError("vertex out of range");
  const internal::BallLayers layers = internal::Balls(g, v, r_max);
  std::vector<std::size_t> out(layers.ends.begin(), layers.ends.end());
  out.resize(r_max + 1, layers.order.size());
  return out;
}

std::vector<GrowthStep> growth_audit(const SparseGraph& g, Vertex v,
                                     const ExpansionThresholds& t, std::size_t r_max) {
  const std::vector<std::size_t> balls = ball_growth(g, v, r_max + 1);
  std::vector<GrowthStep> out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    GrowthStep step;
    step.r = r;
    step.ball = balls[r];
    step.next = balls[r + 1];
    step.factor = static_cast<double>(step.next) / static_cast<double>(step.ball);
    const double b = static_cast<double>(step.ball);
    if (b >= t.s_min && b <= t.s_mid) {
      step.band = AuditBand::kConnected;
      step.required = 1.0 + t.factor_connected;
    } else if (b >= t.s_mid && b <= t.s_max) {
      step.band = AuditBand::kLinear;
      step.required = 1.0 + t.factor_linear;
    }
    step.pass = !step.band || step.factor >= step.required;
    out.push_back(step);
  }
  return out;
}

std::vector<double> stationary_distribution(const SparseGraph& g) {
  return kernels::StationaryDistribution(g);
}

std::vector<double> lazy_step(const SparseGraph& g, std::span<const double> dist) {
  if (dist.size() != g.num_vertices()) throw InputError("distribution length mismatch");
  std::vector<double> out(dist.size());
  kernels::LazyStepParallel(g, dist, out);
  return out;
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("distributions have different supports");
  return kernels::TotalVariation(a, b);
}

MixingResult mixing_time_exact(const SparseGraph& g, const StartMode& mode,
                               std::size_t max_steps) {
  CheckConnected(g);
  const std::size_t m = g.num_vertices();
  std::vector<Vertex> starts;
  MixingResult out;
  if (mode.all) {
    if (m > kAllStartsLimit) {
      throw BudgetExceeded("all-starts mixing is limited to " + std::to_string(kAllStartsLimit) +
                           " vertices; use sampled starts");
    }
    starts.resize(m);
    std::iota(starts.begin(), starts.end(), Vertex{0});
  } else {
    if (mode.count == 0) throw InputError("sampled mixing needs at least one start");
    std::vector<Vertex> all(m);
    std::iota(all.begin(), all.end(), Vertex{0});
    Rng rng(mode.seed);
    const std::size_t k = std::min(mode.count, m);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, m - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    starts.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(starts.begin(), starts.end());
    out.lower_bound = k < m;
  }
  kernels::TvCurve curve = kernels::MixingCurveParallel(g, starts, 0.25, max_steps);
  out.starts = starts.size();
  out.t_mix = curve.d.size() - 1;
  out.d = std::move(curve.d);
  return out;
}

Conductance conductance(const SparseGraph& g, const VertexSet& s) {
  if (s.empty() || s.size() >= g.num_vertices()) {
    throw InputError("conductance needs a nonempty proper subset");
  }
  const SetStats stats = set_stats(g, s);
  const double e = static_cast<double>(g.num_edges());
  const double vol = 2.0 * static_cast<double>(stats.internal_edges) +
                     static_cast<double>(stats.boundary_edges);
  Conductance out;
  out.pi_S = vol / (2.0 * e);
  out.Q_S = static_cast<double>(stats.boundary_edges) / (4.0 * e);
  out.phi_S = out.Q_S / (out.pi_S * (1.0 - out.pi_S));
  return out;
}

ConductanceProfile conductance_profile(const SparseGraph& g, std::size_t samples,
                                       std::uint64_t seed, std::uint64_t budget) {
  CheckConnected(g);
  const std::size_t m = g.num_vertices();
  const std::uint64_t e = g.num_edges();
  if (e == 0) throw InputError("conductance needs at least one edge");
  const std::uint64_t two_e = 2 * e;
  ConductanceProfile out;
  std::size_t min_deg = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < m; ++v) min_deg = std::min(min_deg, g.degree(v));
  out.pi_min = static_cast<double>(min_deg) / static_cast<double>(two_e);
  const auto bands = static_cast<std::size_t>(std::ceil(std::log2(1.0 / out.pi_min) - 1e-12));
  std::vector<std::optional<Phi>> best(bands + 1);
  out.bands.resize(bands);
  for (std::size_t j = 1; j <= bands; ++j) {
    ProfileBand& b = out.bands[j - 1];
    b.j = j;
    b.hi = std::ldexp(1.0, -static_cast<int>(j));
    b.lo = b.hi / 2.0;
  }

  internal::SetTracker t(g);
  auto offer = [&](const internal::SetTracker& set) {
    ++out.candidates;
    const std::uint64_t vol = set.volume();
    if (vol == 0 || vol >= two_e || set.size() >= m) return;
    const Phi phi = MakePhi(set.boundary_edges(), vol, e);
    for (std::size_t j = 1; j <= bands; ++j) {
      if (!InBand(vol, two_e, j)) continue;
      ProfileBand& b = out.bands[j - 1];
      std::vector<Vertex> members(set.members().begin(), set.members().end());
      std::sort(members.begin(), members.end());
      const bool better = !best[j] || phi < *best[j] ||
                          (!(*best[j] < phi) && internal::LexLess(members, b.witness.members()));
      if (better) {
        best[j] = phi;
        b.phi = phi.value();
        b.found = true;
        b.witness = VertexSet(std::move(members));
      }
    }
  };

  bool exhaustive = m <= 26;
  if (exhaustive) {
    try {
      count_connected_subsets(g, m - 1, budget);
    } catch (const BudgetExceeded&) {
      exhaustive = false;
    }
  }
  if (exhaustive) {
    out.mode = AuditMode::kExhaustive;
    enumerate_connected_subsets(
        g, m - 1,
        [&](std::span<const Vertex> s) {
          t.Clear();
          for (Vertex v : s) t.Add(v);
          offer(t);
        },
        budget);
  } else {
    out.mode = AuditMode::kSampled;
    const std::vector<Vertex> order = internal::SweepOrder(g, seed);
    for (int dir = 0; dir < 2; ++dir) {
      t.Clear();
      for (std::size_t i = 0; i + 1 < m; ++i) {
        t.Add(dir == 0 ? order[i] : order[m - 1 - i]);
        if (2 * t.volume() > two_e) break;
        if (induces_connected(g, t.members())) offer(t);
      }
    }
    for (Vertex v = 0; v < m; ++v) {
      const internal::BallLayers layers = internal::Balls(g, v, m);
      t.Clear();
      std::size_t next = 0;
      for (std::size_t end : layers.ends) {
        for (; next < end; ++next) t.Add(layers.order[next]);
        if (2 * t.volume() > two_e) break;
        offer(t);
      }
    }
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng(DeriveSeed(seed, i));
      GrowChain(g, t, rng, m - 1, [&](const internal::SetTracker& set) {
        if (2 * set.volume() > two_e) return false;
        offer(set);
        return true;
      });
    }
  }
  out.fr_sum = 0.0;
  for (const ProfileBand& b : out.bands) out.fr_sum += 1.0 / (b.phi * b.phi);
  return out;
}

MassAuditReport small_set_mass_audit(const SparseGraph& g, std::size_t n, double epsilon,
                                std::size_t samples, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  MassAuditReport out;
  const double log_n = std::log(static_cast<double>(n));
  out.mass_threshold = 160.0 * log_n / (epsilon * epsilon);
  out.size_threshold = 16.0 * log_n / (epsilon * epsilon);
  if (g.num_vertices() == 0) return out;
  internal::SetTracker t(g);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(DeriveSeed(seed, i));
    GrowChain(g, t, rng, g.num_vertices(), [&](const internal::SetTracker& set) {
      if (static_cast<double>(set.size()) >= out.size_threshold) return false;
      ++out.sets_checked;
      const std::uint64_t mass = set.internal_edges() + set.boundary_edges();
      if (static_cast<double>(mass) >= out.mass_threshold) {
        ++out.violation_count;
        if (!out.witness) {
          out.witness = RecordOf(set, static_cast<double>(mass) / static_cast<double>(set.size()),
                                 true);
        }
      }
      return true;
    });
  }
  return out;
}

PhiFloorReport phi_floor_audit(const SparseGraph& g, std::size_t n, double epsilon,
                               double big_c, double small_c, std::size_t samples,
                               std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  CheckConnected(g);
  PhiFloorReport out;
  const double nn = static_cast<double>(n);
  out.pi_lo = big_c * std::log(nn) / (epsilon * epsilon * epsilon * nn);
  out.floor = small_c * epsilon * epsilon / std::log(1.0 / epsilon);
  out.min_phi = std::numeric_limits<double>::infinity();
  const std::uint64_t e = g.num_edges();
  if (e == 0) return out;
  const double two_e = 2.0 * static_cast<double>(e);
  internal::SetTracker t(g);
  std::optional<Phi> best;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(DeriveSeed(seed, i));
    GrowChain(g, t, rng, g.num_vertices() - 1, [&](const internal::SetTracker& set) {
      const double pi = static_cast<double>(set.volume()) / two_e;
      if (pi > 0.5) return false;
      if (pi < out.pi_lo) return true;
      ++out.sets_checked;
      const Phi phi = MakePhi(set.boundary_edges(), set.volume(), e);
      const bool violates = phi.value() < out.floor;
      if (violates) ++out.violation_count;
      if (!best || phi < *best) {
        best = phi;
        out.min_phi = phi.value();
        out.witness = RecordOf(set, phi.value(), violates);
      }
      return true;
    });
  }
  return out;
}

}  // namespace giantlab
