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

#include "giantlab/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

enum : std::uint8_t { kInT = 0, kInQ = 1, kInS = 2 };

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("epsilon must be positive");
  }
}

double RetentionProbability(double epsilon, std::size_t d) {
  CheckEpsilon(epsilon);
  if (d == 0) throw InputError("host degree must be positive");
  const double p = (1.0 + epsilon) / static_cast<double>(d);
  if (p > 1.0 + 1e-12) {
    throw InputError("p = (1+eps)/d = " + std::to_string(p) + " exceeds 1");
  }
  return std::min(p, 1.0);
}

}  // namespace

double solve_y(double epsilon) {
  CheckEpsilon(epsilon);
  const double c = 1.0 + epsilon;
  const double target = c * std::exp(-c);
  double lo = 0.0, hi = 1.0;
  // y e^{-y} is increasing on (0, 1); stop once the bracket stops shrinking.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid * std::exp(-mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double giant_fraction(double epsilon) { return 1.0 - solve_y(epsilon) / (1.0 + epsilon); }

SupercriticalParams supercritical_params(double epsilon, std::size_t d) {
  SupercriticalParams out;
  out.epsilon = epsilon;
  out.p = RetentionProbability(epsilon, d);
  out.delta_ceiling = std::pow(epsilon, 4);
  out.y = solve_y(epsilon);
  out.giant_fraction = 1.0 - out.y / (1.0 + epsilon);
  return out;
}

PercolatedGraph percolate(std::shared_ptr<const RegularGraph> host, double epsilon,
                          std::uint64_t seed) {
  if (!host) throw InputError("percolate needs a host graph");
  return PercolatedGraph(host, RetentionProbability(epsilon, host->d()), seed);
}

GiantCensus giant_census(const PercolatedGraph& g, double epsilon) {
  const ComponentCensus census = connected_components(g);
  GiantCensus out;
  out.num_components = census.count();
  out.L1_size = census.sizes.empty() ? 0 : census.sizes[0];
  out.second_size = census.count() > 1 ? census.sizes[1] : 0;
  out.L1_fraction = static_cast<double>(out.L1_size) / static_cast<double>(g.n());
  out.theory_fraction = giant_fraction(epsilon);
  if (out.L1_size > 0) {
    out.L1 = census.members(0);
    out.excess_L1 = excess(g, out.L1);
  }
  return out;
}

BfsTrace randomized_bfs(const RegularGraph& host, double epsilon, std::uint64_t seed,
                        const BfsOptions& options) {
  const std::size_t n = host.n();
  const double p = RetentionProbability(epsilon, host.d());
  const EdgeCoin coin(p, seed);
  const double nd = static_cast<double>(n) * static_cast<double>(host.d());

  BfsTrace trace;
  trace.n = n;
  trace.d = host.d();
  trace.epsilon = epsilon;
  trace.p = p;
  trace.seed = seed;
  trace.interval_lo = epsilon * epsilon * nd / 20.0;
  trace.interval_hi = 3.0 * epsilon * nd / 4.0;

  LayeredPhase& layered = trace.layered;
  layered.switch_step = options.switch_step.value_or(
      static_cast<std::uint64_t>(std::floor(3.0 * epsilon * nd / 4.0)));
  layered.q0_threshold = epsilon * epsilon * static_cast<double>(n) / 9.0;
  layered.cutoff = 7.0 * epsilon * epsilon * static_cast<double>(n) / 90.0;
  layered.claim_size = 11.0 * epsilon * static_cast<double>(n) / 10.0;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (options.random_order) {
    Rng rng(options.order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<Vertex> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Vertex>(i);

  std::vector<std::uint8_t> state(n, kInT);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::size_t head = 0, next_root = 0;
  std::uint32_t s_count = 0, q_count = 0, t_count = static_cast<std::uint32_t>(n);

  // Layered-phase snapshot taken when the query count hits switch_step.
  std::vector<std::uint8_t> t_snapshot;
  std::vector<Vertex> q0;

  auto take_snapshot = [&]() {
    layered.switch_reached = true;
    t_snapshot.resize(n);
    for (std::size_t v = 0; v < n; ++v) t_snapshot[v] = state[v] == kInT;
    q0.assign(queue.begin() + static_cast<std::ptrdiff_t>(std::min(head + 1, queue.size())),
              queue.end());
    layered.component_at_switch = trace.components.empty() ? 0 : trace.components.back().size;
  };
  if (layered.switch_step == 0) take_snapshot();

  std::vector<Vertex> targets;
  while (true) {
    if (head == queue.size()) {
      while (next_root < n && state[order[next_root]] != kInT) ++next_root;
      if (next_root == n) break;
      const Vertex root = order[next_root];
      state[root] = kInQ;
      queue.push_back(root);
      --t_count;
      ++q_count;
      trace.components.push_back({trace.queries, 0, 1});
    }
    const Vertex v = queue[head];
    targets.clear();
    host.ForEachNeighbor(v, [&](Vertex u) {
      if (state[u] == kInT) targets.push_back(u);
    });
    if (options.random_order) {
      std::sort(targets.begin(), targets.end(),
                [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
    }
    for (Vertex u : targets) {
      ++trace.queries;
      if (coin(v, u)) {
        ++trace.positives;
        state[u] = kInQ;
        queue.push_back(u);
        --t_count;
        ++q_count;
        ++trace.components.back().size;
      }
      if (options.record_steps) {
        trace.s_size.push_back(s_count);
        trace.q_size.push_back(q_count);
        trace.t_size.push_back(t_count);
      }
      if (trace.queries == layered.switch_step) take_snapshot();
    }
    state[v] = kInS;
    ++head;
    --q_count;
    ++s_count;
    if (head == queue.size()) {
      trace.components.back().end = trace.queries;
      trace.queue_empty_at.push_back(trace.queries);
    }
  }

  for (std::uint64_t t : trace.queue_empty_at) {
    if (static_cast<double>(t) >= trace.interval_lo &&
        static_cast<double>(t) <= trace.interval_hi) {
      trace.emptied_in_interval = true;
    }
  }

  if (!layered.switch_reached) return trace;
  layered.q0 = q0.size();
  layered.q0_meets_threshold = static_cast<double>(q0.size()) >= layered.q0_threshold;
  if (q0.empty()) {
    layered.q_empty_at_switch = true;
    return trace;
  }
  const double nn = static_cast<double>(n);
  std::size_t cumulative = q0.size();
  std::size_t discovered = layered.component_at_switch;
  std::vector<Vertex> current = q0, next;
  auto record_layer = [&](std::size_t index, std::size_t size) {
    layered.q.push_back(static_cast<double>(size) / nn);
    layered.n_cum.push_back(static_cast<double>(cumulative) / nn);
    if (!layered.cutoff_index && static_cast<double>(size) <= layered.cutoff) {
      layered.cutoff_index = index;
      layered.discovered_at_cutoff = discovered;
    }
  };
  record_layer(0, current.size());
  for (std::size_t i = 1; !current.empty(); ++i) {
    next.clear();
    for (Vertex w : current) {
      host.ForEachNeighbor(w, [&](Vertex u) {
        if (t_snapshot[u] && coin(w, u)) {
          t_snapshot[u] = 0;
          next.push_back(u);
        }
      });
    }
    cumulative += next.size();
    discovered += next.size();
    record_layer(i, next.size());
    current.swap(next);
  }
  layered.discovered_total = discovered;
  layered.exceeds_claim = static_cast<double>(layered.discovered_at_cutoff) > layered.claim_size;
  return trace;
}

}  // namespace giantlab
