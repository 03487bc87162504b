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

// Straightforward single-threaded reference kernels.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "giantlab/kernels.hpp"
#include "kernels_internal.hpp"

namespace giantlab::kernels {

std::vector<Edge> RetainedEdgesSerial(const RegularGraph& host,
                                      const EdgeCoin& coin) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < host.n(); ++u) {
    host.ForEachNeighbor(u, [&](Vertex v) {
      if (u < v && coin(u, v)) out.push_back({u, v});
    });
  }
  return out;
}

std::vector<Vertex> ComponentLabelsSerial(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(n, kUnset);
  std::vector<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != kUnset) continue;
    label[root] = root;
    frontier.assign(1, root);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (Vertex u : g.neighbors(frontier[head])) {
        if (label[u] == kUnset) {
          label[u] = root;
          frontier.push_back(u);
        }
      }
    }
  }
  return label;
}

void AdjacencyMultiplySerial(const RegularGraph& g, std::span<const double> x,
                             std::span<double> y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double sum = 0.0;
    g.ForEachNeighbor(v, [&](Vertex u) { sum += x[u]; });
    y[v] = sum;
  }
}

void LazyStepSerial(const SparseGraph& g, std::span<const double> in,
                    std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t deg = g.degree(v);
    if (deg == 0) {
      out[v] += in[v];
      continue;
    }
    out[v] += 0.5 * in[v];
    const double share = in[v] / (2.0 * static_cast<double>(deg));
    for (Vertex u : g.neighbors(v)) out[u] += share;
  }
}

std::vector<std::uint32_t> EccentricitiesSerial(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> ecc(n, 0);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    queue.assign(1, s);
    std::uint32_t far = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      far = std::max(far, dist[v]);
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] == kUnseen) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    ecc[s] = far;
  }
  return ecc;
}

std::vector<double> StationaryDistribution(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> pi(n, 0.0);
  if (g.num_edges() == 0) {
    if (n == 1) pi[0] = 1.0;
    return pi;
  }
  const double total = 2.0 * static_cast<double>(g.num_edges());
  for (Vertex v = 0; v < n; ++v) pi[v] = static_cast<double>(g.degree(v)) / total;
  return pi;
}

double TotalVariation(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

TvCurve MixingCurveSerial(const SparseGraph& g, std::span<const Vertex> starts,
                          double threshold, std::size_t max_steps) {
  const std::vector<double> pi = StationaryDistribution(g);
  std::vector<std::vector<double>> curves;
  curves.reserve(starts.size());
  for (Vertex s : starts) {
    curves.push_back(internal::StartCurve(g, pi, s, threshold, max_steps, true,
                                          LazyStepSerial));
  }
  std::size_t horizon = 0;
  for (const auto& c : curves) horizon = std::max(horizon, c.size() - 1);
  std::vector<double> at_end;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (curves[i].size() - 1 < horizon) {
      at_end.push_back(internal::StartCurve(g, pi, starts[i], threshold,
                                            horizon, false, LazyStepSerial)
                           .back());
    }
  }
  return internal::AssembleCurve(curves, starts, at_end);
}

namespace internal {

std::vector<double> StartCurve(const SparseGraph& g, std::span<const double> pi,
                               Vertex start, double threshold,
                               std::size_t max_steps, bool stop_at_threshold,
                               StepFn step) {
  const std::size_t n = g.num_vertices();
  std::vector<double> cur(n, 0.0), next(n, 0.0);
  cur[start] = 1.0;
  std::vector<double> curve{TotalVariation(cur, pi)};
  while (true) {
    if (stop_at_threshold && curve.back() <= threshold) break;
    if (!stop_at_threshold && curve.size() > max_steps) break;
    if (stop_at_threshold && curve.size() > max_steps) {
      throw BudgetExceeded("lazy walk did not reach d_TV <= " +
                           std::to_string(threshold) + " within " +
                           std::to_string(max_steps) + " steps");
    }
    step(g, cur, next);
    cur.swap(next);
    curve.push_back(TotalVariation(cur, pi));
  }
  return curve;
}

TvCurve AssembleCurve(const std::vector<std::vector<double>>& curves,
                      std::span<const Vertex> starts,
                      const std::vector<double>& at_end) {
  TvCurve out;
  std::size_t horizon = 0;
  for (const auto& c : curves) horizon = std::max(horizon, c.size() - 1);
  out.d.assign(horizon + 1, 0.0);
  out.first_hit.resize(starts.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    out.first_hit[i] = static_cast<std::uint32_t>(c.size() - 1);
    for (std::size_t t = 0; t < c.size(); ++t) out.d[t] = std::max(out.d[t], c[t]);
  }
  // Starts that finished early still contribute their value at the horizon.
  for (double v : at_end) out.d[horizon] = std::max(out.d[horizon], v);
  return out;
}

}  // namespace internal

}  // namespace giantlab::kernels
