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

// OpenMP kernels. Work is split into fixed blocks whose outputs are merged in
// block order, so results never depend on the schedule.

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <vector>

#include "giantlab/kernels.hpp"
#include "kernels_internal.hpp"

namespace giantlab::kernels {
namespace {

constexpr std::size_t kRowBlock = 256;

std::size_t NumBlocks(std::size_t n, std::size_t block) {
  return (n + block - 1) / block;
}

}  // namespace

std::vector<Edge> RetainedEdgesParallel(const RegularGraph& host,
                                        const EdgeCoin& coin) {
  const std::size_t n = host.n();
  const std::size_t blocks = NumBlocks(n, kRowBlock);
  std::vector<std::vector<Edge>> parts(blocks);
  const bool complete = host.kind() == GraphKind::kComplete;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<Edge>& out = parts[b];
    const Vertex lo = static_cast<Vertex>(b * kRowBlock);
    const Vertex hi = static_cast<Vertex>(std::min(n, (b + 1) * kRowBlock));
    for (Vertex u = lo; u < hi; ++u) {
      if (complete) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin(u, v)) out.push_back({u, v});
        }
      } else {
        host.ForEachNeighbor(u, [&](Vertex v) {
          if (u < v && coin(u, v)) out.push_back({u, v});
        });
      }
    }
  }
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  std::vector<Edge> out;
  out.reserve(total);
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Min-label propagation with pointer jumping, Jacobi style: every round reads
// only the previous round's labels.
std::vector<Vertex> ComponentLabelsParallel(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> cur(n), next(n);
  std::iota(cur.begin(), cur.end(), Vertex{0});
  bool changed = true;
  while (changed) {
    changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
    for (std::size_t v = 0; v < n; ++v) {
      Vertex best = cur[v];
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) best = std::min(best, cur[u]);
      // Jump: cur[best] is a label reachable from best, hence from v.
      best = std::min(best, cur[best]);
      next[v] = best;
      changed = changed || best != cur[v];
    }
    cur.swap(next);
  }
  return cur;
}

void AdjacencyMultiplyParallel(const RegularGraph& g, std::span<const double> x,
                               std::span<double> y) {
  const std::size_t n = g.n();
  switch (g.kind()) {
    case GraphKind::kComplete: {
      double total = 0.0;
      for (std::size_t v = 0; v < n; ++v) total += x[v];
#pragma omp parallel for schedule(static)
      for (std::size_t v = 0; v < n; ++v) y[v] = total - x[v];
      return;
    }
    case GraphKind::kPaley: {
      // Circulant rule y[v] = sum_r x[(v + r) mod q]; doubling x turns every
      // residue into a contiguous, vectorizable stream.
      std::vector<double> doubled(2 * n);
      std::copy(x.begin(), x.end(), doubled.begin());
      std::copy(x.begin(), x.end(), doubled.begin() + static_cast<std::ptrdiff_t>(n));
      const auto residues = g.residues();
      const std::size_t blocks = NumBlocks(n, 2048);
#pragma omp parallel for schedule(static)
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t lo = b * 2048;
        const std::size_t hi = std::min(n, lo + 2048);
        double* out = y.data();
        std::fill(out + lo, out + hi, 0.0);
        for (Vertex r : residues) {
          const double* src = doubled.data() + r;
          for (std::size_t v = lo; v < hi; ++v) out[v] += src[v];
        }
      }
      return;
    }
    default: {
#pragma omp parallel for schedule(static)
      for (std::size_t v = 0; v < n; ++v) {
        double sum = 0.0;
        g.ForEachNeighbor(static_cast<Vertex>(v), [&](Vertex u) { sum += x[u]; });
        y[v] = sum;
      }
    }
  }
}

namespace internal {

void LazyStepPull(const SparseGraph& g, std::span<const double> in,
                  std::span<double> out) {
  const std::size_t n = g.num_vertices();
  thread_local std::vector<double> share;
  share.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(static_cast<Vertex>(v));
    share[v] = deg == 0 ? 0.0 : in[v] / static_cast<double>(2 * deg);
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(static_cast<Vertex>(u)) == 0) {
      out[u] = in[u];
      continue;
    }
    double acc = 0.0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) acc += share[v];
    out[u] = 0.5 * in[u] + acc;
  }
}

}  // namespace internal

void LazyStepParallel(const SparseGraph& g, std::span<const double> in,
                      std::span<double> out) {
  const std::size_t n = g.num_vertices();
  std::vector<double> share(n);
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t deg = g.degree(static_cast<Vertex>(v));
      share[v] = deg == 0 ? 0.0 : in[v] / static_cast<double>(2 * deg);
    }
#pragma omp for schedule(static)
    for (std::size_t u = 0; u < n; ++u) {
      if (g.degree(static_cast<Vertex>(u)) == 0) {
        out[u] = in[u];
        continue;
      }
      double acc = 0.0;
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) acc += share[v];
      out[u] = 0.5 * in[u] + acc;
    }
  }
}

std::vector<std::uint32_t> EccentricitiesParallel(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> ecc(n, 0);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), kUnseen);
      dist[s] = 0;
      queue.assign(1, static_cast<Vertex>(s));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex u : g.neighbors(v)) {
          if (dist[u] == kUnseen) {
            dist[u] = dist[v] + 1;
            queue.push_back(u);
          }
        }
      }
      ecc[s] = dist[queue.back()];
    }
  }
  return ecc;
}

TvCurve MixingCurveParallel(const SparseGraph& g,
                            std::span<const Vertex> starts, double threshold,
                            std::size_t max_steps) {
  const std::vector<double> pi = StationaryDistribution(g);
  const std::size_t count = starts.size();
  std::vector<std::vector<double>> curves(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      curves[i] = internal::StartCurve(g, pi, starts[i], threshold, max_steps,
                                       true, internal::LazyStepPull);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t horizon = 0;
  for (const auto& c : curves) horizon = std::max(horizon, c.size() - 1);
  std::vector<double> at_end(count, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    if (curves[i].size() - 1 < horizon) {
      at_end[i] = internal::StartCurve(g, pi, starts[i], threshold, horizon,
                                       false, internal::LazyStepPull)
                      .back();
    }
  }
  return internal::AssembleCurve(curves, starts, at_end);
}

}  // namespace giantlab::kernels
