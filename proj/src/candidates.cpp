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

#include "candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "giantlab/rng.hpp"

namespace giantlab::internal {

SetTracker::SetTracker(const SparseGraph& g)
    : g_(g), in_(g.num_vertices(), 0), into_(g.num_vertices(), 0) {}

void SetTracker::Add(Vertex v) {
  if (in_[v]) return;
  const std::uint32_t inside = into_[v];
  if (inside > 0) --external_;
  internal_ += inside;
  boundary_ = boundary_ + g_.degree(v) - 2 * static_cast<std::uint64_t>(inside);
  in_[v] = 1;
  members_.push_back(v);
  touched_.push_back(v);
  for (Vertex u : g_.neighbors(v)) {
    if (into_[u]++ == 0) touched_.push_back(u);
    if (!in_[u] && into_[u] == 1) ++external_;
  }
}

void SetTracker::Remove(Vertex v) {
  if (!in_[v]) return;
  in_[v] = 0;
  members_.pop_back();
  for (Vertex u : g_.neighbors(v)) {
    if (--into_[u] == 0 && !in_[u]) --external_;
  }
  const std::uint32_t inside = into_[v];
  if (inside > 0) ++external_;
  internal_ -= inside;
  boundary_ = boundary_ + 2 * static_cast<std::uint64_t>(inside) - g_.degree(v);
}

void SetTracker::Clear() {
  for (Vertex v : touched_) {
    in_[v] = 0;
    into_[v] = 0;
  }
  touched_.clear();
  members_.clear();
  internal_ = boundary_ = external_ = 0;
}

std::vector<Vertex> SweepOrder(const SparseGraph& g, std::uint64_t seed,
                               std::size_t iterations) {
  const std::size_t n = g.num_vertices();
  std::vector<double> sqrt_deg(n), x(n), y(n);
  double top_norm = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    sqrt_deg[v] = std::sqrt(static_cast<double>(g.degree(v)));
    top_norm += static_cast<double>(g.degree(v));
  }
  top_norm = std::sqrt(top_norm);
  Rng rng(seed);
  std::normal_distribution<double> normal;
  for (double& v : x) v = normal(rng);

  // Power iteration on (I + D^{-1/2} A D^{-1/2}) / 2, whose top eigenvector
  // D^{1/2} 1 is projected out every step.
  auto deflate = [&](std::vector<double>& z) {
    if (top_norm == 0.0) return;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += z[i] * sqrt_deg[i];
    dot /= top_norm * top_norm;
    for (std::size_t i = 0; i < n; ++i) z[i] -= dot * sqrt_deg[i];
  };
  auto normalize = [&](std::vector<double>& z) {
    double s = 0.0;
    for (double v : z) s += v * v;
    s = std::sqrt(s);
    if (s > 0.0) {
      for (double& v : z) v /= s;
    }
  };
  deflate(x);
  normalize(x);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = 0.0;
      if (sqrt_deg[v] > 0.0) {
        for (Vertex u : g.neighbors(v)) acc += x[u] / sqrt_deg[u];
        acc /= sqrt_deg[v];
      }
      y[v] = 0.5 * (x[v] + acc);
    }
    deflate(y);
    normalize(y);
    x.swap(y);
  }
  std::vector<double> score(n);
  for (Vertex v = 0; v < n; ++v) {
    score[v] = sqrt_deg[v] > 0.0 ? x[v] / sqrt_deg[v]
                                 : std::numeric_limits<double>::infinity();
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return score[a] < score[b]; });
  return order;
}

BallLayers Balls(const SparseGraph& g, Vertex v, std::size_t max_radius) {
  BallLayers out;
  std::vector<std::uint8_t> seen(g.num_vertices(), 0);
  out.order.push_back(v);
  seen[v] = 1;
  out.ends.push_back(1);
  std::size_t begin = 0;
  for (std::size_t r = 1; r <= max_radius; ++r) {
    const std::size_t end = out.order.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Vertex u : g.neighbors(out.order[i])) {
        if (!seen[u]) {
          seen[u] = 1;
          out.order.push_back(u);
        }
      }
    }
    begin = end;
    if (out.order.size() == end) break;
    out.ends.push_back(out.order.size());
  }
  return out;
}

bool LexLess(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace giantlab::internal
