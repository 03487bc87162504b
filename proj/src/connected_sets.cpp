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

#include "giantlab/connected_sets.hpp"

#include <algorithm>
#include <string>

namespace giantlab {
namespace {

// ESU: a set is extended only by vertices larger than its root that are not
// already in the closed neighborhood of the set, which yields each connected
// set exactly once.
class Esu {
 public:
  Esu(const SparseGraph& g, std::size_t k_max, std::uint64_t budget,
      const SetVisitor* visit)
      : g_(g), k_max_(k_max), budget_(budget), visit_(visit), cover_(g.num_vertices(), 0) {}

  std::uint64_t Run() {
    if (k_max_ == 0) return 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      root_ = v;
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(v)) {
        if (u > v) ext.push_back(u);
      }
      Push(v);
      Extend(std::move(ext));
      Pop(v);
    }
    return count_;
  }

 private:
  void Push(Vertex w) {
    sub_.push_back(w);
    ++cover_[w];
    for (Vertex u : g_.neighbors(w)) ++cover_[u];
  }

  void Pop(Vertex w) {
    sub_.pop_back();
    --cover_[w];
    for (Vertex u : g_.neighbors(w)) --cover_[u];
  }

  void Extend(std::vector<Vertex> ext) {
    if (++count_ > budget_) {
      throw BudgetExceeded("more than " + std::to_string(budget_) +
                           " connected sets; use sampling");
    }
    if (visit_) {
      sorted_.assign(sub_.begin(), sub_.end());
      std::sort(sorted_.begin(), sorted_.end());
      (*visit_)(sorted_);
    }
    if (sub_.size() == k_max_) return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (u > root_ && cover_[u] == 0) next.push_back(u);
      }
      Push(w);
      Extend(std::move(next));
      Pop(w);
    }
  }

  const SparseGraph& g_;
  std::size_t k_max_;
  std::uint64_t budget_;
  const SetVisitor* visit_;
  std::vector<std::uint32_t> cover_;  // |N[u] n sub|
  std::vector<Vertex> sub_;
  std::vector<Vertex> sorted_;
  Vertex root_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_connected_subsets(const SparseGraph& g, std::size_t k_max,
                                      std::uint64_t budget) {
  return Esu(g, k_max, budget, nullptr).Run();
}

void enumerate_connected_subsets(const SparseGraph& g, std::size_t k_max,
                                 const SetVisitor& visit, std::uint64_t budget) {
  count_connected_subsets(g, k_max, budget);
  Esu(g, k_max, budget, &visit).Run();
}

std::vector<VertexSet> enumerate_connected_subsets(const PercolatedGraph& g,
                                                   std::size_t k_max,
                                                   std::uint64_t budget) {
  std::vector<VertexSet> out;
  enumerate_connected_subsets(
      g.graph(), k_max,
      [&](std::span<const Vertex> s) { out.emplace_back(std::vector<Vertex>(s.begin(), s.end())); },
      budget);
  return out;
}

SetGrower::SetGrower(const SparseGraph& g) : g_(g), mark_(g.num_vertices(), 0) {}

VertexSet SetGrower::Grow(Vertex start, std::size_t k, Rng& rng) {
  static const std::vector<std::uint8_t> kNone;
  return Grow(start, k, rng, kNone);
}

VertexSet SetGrower::Grow(Vertex start, std::size_t k, Rng& rng,
                          const std::vector<std::uint8_t>& blocked) {
  enum : std::uint8_t { kFree = 0, kMember = 1, kFrontier = 2 };
  auto is_blocked = [&](Vertex v) { return !blocked.empty() && blocked[v]; };
  std::vector<Vertex> members, frontier;
  auto add = [&](Vertex v) {
    mark_[v] = kMember;
    touched_.push_back(v);
    members.push_back(v);
    for (Vertex u : g_.neighbors(v)) {
      if (mark_[u] == kFree && !is_blocked(u)) {
        mark_[u] = kFrontier;
        touched_.push_back(u);
        frontier.push_back(u);
      }
    }
  };
  if (k > 0 && !is_blocked(start)) add(start);
  while (members.size() < k && !frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    add(v);
  }
  for (Vertex v : touched_) mark_[v] = kFree;
  touched_.clear();
  return VertexSet(std::move(members));
}

std::vector<VertexSet> sample_connected_subsets(const PercolatedGraph& g, std::size_t k,
                                                std::size_t count, std::uint64_t seed) {
  const ComponentCensus census = connected_components(g);
  const std::size_t l1_size = census.sizes.empty() ? 0 : census.sizes[0];
  if (k == 0 || k > l1_size) {
    throw InputError("sample size " + std::to_string(k) + " outside [1, |L1| = " +
                     std::to_string(l1_size) + "]");
  }
  const VertexSet l1 = census.members(0);
  std::vector<VertexSet> out(count);
#pragma omp parallel
  {
    SetGrower grower(g.graph());
#pragma omp for schedule(dynamic, 8)
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng(DeriveSeed(seed, i));
      std::uniform_int_distribution<std::size_t> pick(0, l1.size() - 1);
      out[i] = grower.Grow(l1[pick(rng)], k, rng);
    }
  }
  return out;
}

}  // namespace giantlab
