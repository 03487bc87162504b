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

#include "giantlab/expander_extract.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "candidates.hpp"
#include "giantlab/connected_sets.hpp"
#include "giantlab/expansion_audit.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

bool Violates(std::size_t neighbors, std::size_t size, double factor) {
  return static_cast<double>(neighbors) < factor * static_cast<double>(size);
}

// Smaller ratio wins, then the larger set.
bool RatioBetter(std::size_t na, std::size_t sa, std::size_t nb, std::size_t sb) {
  const std::uint64_t lhs = static_cast<std::uint64_t>(na) * sb;
  const std::uint64_t rhs = static_cast<std::uint64_t>(nb) * sa;
  if (lhs != rhs) return lhs < rhs;
  return sa > sb;
}

Violator MakeViolator(std::vector<Vertex> members, std::size_t neighbors,
                      std::string_view stage) {
  Violator v;
  v.ratio = static_cast<double>(neighbors) / static_cast<double>(members.size());
  v.neighbors = neighbors;
  v.set = VertexSet(std::move(members));
  v.stage = stage;
  return v;
}

std::optional<Violator> ExhaustiveSearch(const SparseGraph& h, double factor) {
  const std::size_t m = h.num_vertices();
  std::vector<std::uint32_t> adj(m, 0);
  for (Vertex v = 0; v < m; ++v) {
    for (Vertex u : h.neighbors(v)) adj[v] |= 1u << u;
  }
  const std::size_t max_size = m / 2;
  struct Frame {
    std::uint32_t set, nbrs;
    Vertex next;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  bool found = false;
  std::uint32_t best_set = 0;
  std::size_t best_n = 0, best_size = 0;
  // Preorder over increasing sequences is lexicographic order, so the first
  // set reaching a given (ratio, size) is the lexicographically smallest.
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t size = std::popcount(top.set);
    if (size == max_size || top.next >= m) {
      stack.pop_back();
      continue;
    }
    const Vertex v = top.next++;
    const std::uint32_t set = top.set | (1u << v);
    const std::uint32_t nbrs = top.nbrs | adj[v];
    const std::size_t n_out = std::popcount(nbrs & ~set);
    const std::size_t s = size + 1;
    if (Violates(n_out, s, factor) &&
        (!found || RatioBetter(n_out, s, best_n, best_size))) {
      found = true;
      best_set = set;
      best_n = n_out;
      best_size = s;
    }
    stack.push_back({set, nbrs, v + 1});
  }
  if (!found) return std::nullopt;
  std::vector<Vertex> members;
  for (Vertex v = 0; v < m; ++v) {
    if (best_set & (1u << v)) members.push_back(v);
  }
  return MakeViolator(std::move(members), best_n, "exhaustive");
}

// Tracks the best violator within one heuristic stage.
struct StageBest {
  std::optional<Violator> best;

  void Offer(std::span<const Vertex> members, std::size_t neighbors, double factor,
             std::string_view stage) {
    if (!Violates(neighbors, members.size(), factor)) return;
    std::vector<Vertex> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    if (best) {
      const std::size_t bs = best->set.size();
      if (!RatioBetter(neighbors, sorted.size(), best->neighbors, bs)) {
        const bool tie = static_cast<std::uint64_t>(neighbors) * bs ==
                             static_cast<std::uint64_t>(best->neighbors) * sorted.size() &&
                         sorted.size() == bs;
        if (!tie || !internal::LexLess(sorted, best->set.members())) return;
      }
    }
    best = MakeViolator(std::move(sorted), neighbors, stage);
  }
};

std::optional<Violator> HeuristicSearch(const SparseGraph& h, double factor,
                                        const SearchOptions& opt) {
  const std::size_t m = h.num_vertices();
  const std::size_t max_size = m / 2;
  if (max_size == 0) return std::nullopt;
  internal::SetTracker t(h);

  StageBest sweep;
  const std::vector<Vertex> order = internal::SweepOrder(h, opt.seed);
  for (int dir = 0; dir < 2; ++dir) {
    t.Clear();
    for (std::size_t i = 0; i < max_size; ++i) {
      t.Add(dir == 0 ? order[i] : order[m - 1 - i]);
      sweep.Offer(t.members(), t.external_neighbors(), factor, "sweep");
    }
  }
  if (sweep.best) return sweep.best;

  StageBest balls;
  for (Vertex v = 0; v < m; ++v) {
    const internal::BallLayers layers = internal::Balls(h, v, 3);
    for (std::size_t end : layers.ends) {
      if (end > max_size) break;
      t.Clear();
      for (std::size_t i = 0; i < end; ++i) t.Add(layers.order[i]);
      balls.Offer(t.members(), t.external_neighbors(), factor, "ball");
    }
  }
  if (balls.best) return balls.best;

  StageBest sampled;
  SetGrower grower(h);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng(DeriveSeed(opt.seed, i));
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<Vertex> start_dist(0, static_cast<Vertex>(m - 1));
    const std::size_t k = size_dist(rng);
    const VertexSet s = grower.Grow(start_dist(rng), k, rng);
    t.Clear();
    for (Vertex v : s) t.Add(v);
    sampled.Offer(t.members(), t.external_neighbors(), factor, "sample");
  }
  return sampled.best;
}

}  // namespace

std::optional<Violator> find_violator(const SparseGraph& h, double factor,
                                      const SearchOptions& options) {
  if (!(factor > 0.0)) return std::nullopt;
  if (h.num_vertices() <= std::min<std::size_t>(options.exhaustive_limit, 31)) {
    return ExhaustiveSearch(h, factor);
  }
  return HeuristicSearch(h, factor, options);
}

double default_target_factor(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  const double log_inv = std::log(1.0 / epsilon);
  return ExpansionConstants{}.c2 * epsilon * epsilon / (log_inv * log_inv);
}

PeelState extract_expander(const PercolatedGraph& g, double epsilon, double target_factor,
                           const ExtractOptions& options) {
  if (g.num_retained_edges() == 0) throw InputError("extract_expander: empty giant");
  PeelState state;
  state.target_factor = target_factor;
  const double nn = static_cast<double>(g.n());
  state.budget = options.budget_override.value_or(epsilon * nn / 6.0);
  state.size_claim = 7.0 * epsilon * nn / 4.0;

  const ComponentCensus census = connected_components(g);
  state.L1 = census.members(0);
  std::vector<std::uint8_t> removed(g.n(), 0);
  std::vector<Vertex> m_members;
  for (std::size_t round = 0;; ++round) {
    std::vector<Vertex> rest;
    for (Vertex v : state.L1) {
      if (!removed[v]) rest.push_back(v);
    }
    const InducedSubgraph sub = induce(g.graph(), VertexSet(std::move(rest)));
    SearchOptions search = options.search;
    search.seed = DeriveSeed(options.search.seed, round);
    const std::optional<Violator> hit = find_violator(sub.graph, target_factor, search);
    if (!hit) break;
    PeelStep step;
    step.removed = sub.ToParent(hit->set.members());
    step.neighbors = hit->neighbors;
    step.ratio = hit->ratio;
    step.stage = hit->stage;
    for (Vertex v : step.removed) {
      removed[v] = 1;
      m_members.push_back(v);
    }
    state.history.push_back(std::move(step));
    if (static_cast<double>(m_members.size()) >= state.budget) {
      state.budget_exceeded = true;
      break;
    }
  }
  state.M = VertexSet(std::move(m_members));
  std::vector<Vertex> rest;
  for (Vertex v : state.L1) {
    if (!removed[v]) rest.push_back(v);
  }
  state.L1_prime = VertexSet(std::move(rest));
  state.size_claim_met = static_cast<double>(state.L1_prime.size()) >= state.size_claim;
  return state;
}

std::string_view VerdictName(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kCertified:
      return "certified";
    case VerdictKind::kCounterexample:
      return "counterexample";
    case VerdictKind::kNoCounterexample:
      return "no-counterexample";
  }
  return "unknown";
}

Verdict verify_expander(const SparseGraph& h, double factor, bool exhaustive,
                        std::size_t samples, std::uint64_t seed) {
  Verdict verdict;
  if (exhaustive) {
    if (h.num_vertices() > kExhaustiveVertexLimit) {
      throw BudgetExceeded("exhaustive verification is limited to " +
                           std::to_string(kExhaustiveVertexLimit) + " vertices");
    }
    verdict.counterexample = factor > 0.0 ? ExhaustiveSearch(h, factor) : std::nullopt;
    verdict.kind = verdict.counterexample ? VerdictKind::kCounterexample : VerdictKind::kCertified;
    return verdict;
  }
  SearchOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  verdict.samples = samples;
  verdict.counterexample = factor > 0.0 ? HeuristicSearch(h, factor, opt) : std::nullopt;
  verdict.kind =
      verdict.counterexample ? VerdictKind::kCounterexample : VerdictKind::kNoCounterexample;
  return verdict;
}

}  // namespace giantlab
