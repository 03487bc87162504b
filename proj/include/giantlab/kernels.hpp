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

// Data-parallel inner loops. Each kernel has a plain serial reference
// (kernels_serial.cpp) and an OpenMP version (kernels_omp.cpp). The library
// calls the OpenMP versions; tests hold them to the serial ones and the
// benchmark target compares their speed.
//
// The OpenMP versions are schedule-independent: every output element is
// computed by one thread in a fixed order, so results do not depend on the
// thread count.

#ifndef GIANTLAB_KERNELS_HPP_
#define GIANTLAB_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "giantlab/graph_core.hpp"

namespace giantlab::kernels {

// Host edges kept by `coin`, as (u < v) pairs in lexicographic order.
std::vector<Edge> RetainedEdgesSerial(const RegularGraph& host,
                                      const EdgeCoin& coin);
std::vector<Edge> RetainedEdgesParallel(const RegularGraph& host,
                                        const EdgeCoin& coin);

// label[v] = smallest vertex in v's component.
std::vector<Vertex> ComponentLabelsSerial(const SparseGraph& g);
std::vector<Vertex> ComponentLabelsParallel(const SparseGraph& g);

// y = A x for the host adjacency matrix A.
void AdjacencyMultiplySerial(const RegularGraph& g, std::span<const double> x,
                             std::span<double> y);
void AdjacencyMultiplyParallel(const RegularGraph& g, std::span<const double> x,
                               std::span<double> y);

// One lazy random-walk step: out(u) = in(u)/2 + sum_{v~u} in(v)/(2 deg v).
// Isolated vertices keep their mass.
void LazyStepSerial(const SparseGraph& g, std::span<const double> in,
                    std::span<double> out);
void LazyStepParallel(const SparseGraph& g, std::span<const double> in,
                      std::span<double> out);

// BFS eccentricity of every vertex; unreachable vertices are ignored.
std::vector<std::uint32_t> EccentricitiesSerial(const SparseGraph& g);
std::vector<std::uint32_t> EccentricitiesParallel(const SparseGraph& g);

// Worst-start total-variation curve of the lazy walk on a connected graph.
// d[t] = max over `starts` of d_TV(P^t(s, .), pi) for t = 0..T, where T is
// the first step with d[T] <= threshold. Throws BudgetExceeded if T would
// exceed max_steps.
struct TvCurve {
  std::vector<double> d;
  std::vector<std::uint32_t> first_hit;  // per start
};

TvCurve MixingCurveSerial(const SparseGraph& g, std::span<const Vertex> starts,
                          double threshold, std::size_t max_steps);
TvCurve MixingCurveParallel(const SparseGraph& g,
                            std::span<const Vertex> starts, double threshold,
                            std::size_t max_steps);

// Stationary distribution deg(v) / 2e of the lazy walk.
std::vector<double> StationaryDistribution(const SparseGraph& g);

// Half the L1 distance.
double TotalVariation(std::span<const double> a, std::span<const double> b);

}  // namespace giantlab::kernels

#endif  // GIANTLAB_KERNELS_HPP_
