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

#include "giantlab/graph_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "giantlab/kernels.hpp"

namespace giantlab {
namespace {

void CheckVertex(Vertex v, std::size_t n) {
  if (v >= n) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n) + ")");
  }
}

}  // namespace

std::string_view KindName(GraphKind kind) {
  switch (kind) {
    case GraphKind::kComplete:
      return "complete";
    case GraphKind::kPaley:
      return "paley";
    case GraphKind::kRandomRegular:
      return "random_regular";
    case GraphKind::kLoaded:
      return "loaded";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RegularGraph

RegularGraph RegularGraph::Complete(std::size_t n) {
  if (n < 2) throw InputError("complete graph needs n >= 2");
  RegularGraph g;
  g.n_ = n;
  g.d_ = n - 1;
  g.kind_ = GraphKind::kComplete;
  return g;
}

RegularGraph RegularGraph::Paley(std::size_t q, std::vector<std::uint8_t> residue) {
  if (residue.size() != q) throw InputError("residue table must have q entries");
  RegularGraph g;
  g.n_ = q;
  g.kind_ = GraphKind::kPaley;
  for (Vertex x = 1; x < q; ++x) {
    if (residue[x]) g.residue_list_.push_back(x);
  }
  g.d_ = g.residue_list_.size();
  g.residue_ = std::move(residue);
  return g;
}

RegularGraph RegularGraph::FromNeighborTable(GraphKind kind, std::size_t n,
                                             std::size_t d,
                                             std::vector<Vertex> table) {
  if (table.size() != n * d) throw InputError("neighbor table must hold n*d entries");
  if ((n * d) % 2 != 0) throw InputError("n*d must be even");
  if (d >= n && n > 0) throw InputError("degree must be below n");
  for (std::size_t v = 0; v < n; ++v) {
    auto row = table.begin() + static_cast<std::ptrdiff_t>(v * d);
    std::sort(row, row + static_cast<std::ptrdiff_t>(d));
    for (std::size_t i = 0; i < d; ++i) {
      const Vertex u = row[static_cast<std::ptrdiff_t>(i)];
      if (u >= n) throw InputError("neighbor out of range at vertex " + std::to_string(v));
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && row[static_cast<std::ptrdiff_t>(i) - 1] == u) {
        throw InputError("duplicate neighbor at vertex " + std::to_string(v));
      }
    }
  }
  RegularGraph g;
  g.n_ = n;
  g.d_ = d;
  g.kind_ = kind;
  g.table_ = std::move(table);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vertex u = g.table_[v * d + i];
      if (!g.adjacent(u, v)) {
        throw InputError("asymmetric adjacency between " + std::to_string(v) +
                         " and " + std::to_string(u));
      }
    }
  }
  return g;
}

std::vector<Vertex> RegularGraph::neighbors(Vertex v) const {
  CheckVertex(v, n_);
  std::vector<Vertex> out;
  out.reserve(d_);
  ForEachNeighbor(v, [&](Vertex u) { out.push_back(u); });
  return out;
}

bool RegularGraph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  switch (kind_) {
    case GraphKind::kComplete:
      return true;
    case GraphKind::kPaley: {
      const std::size_t diff = (v + n_ - u) % n_;
      return residue_[diff] != 0;
    }
    default: {
      const Vertex* row = table_.data() + static_cast<std::size_t>(u) * d_;
      return std::binary_search(row, row + d_, v);
    }
  }
}

std::vector<Edge> RegularGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    ForEachNeighbor(u, [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

std::string RegularGraph::describe() const {
  switch (kind_) {
    case GraphKind::kComplete:
      return "complete(" + std::to_string(n_) + ")";
    case GraphKind::kPaley:
      return "paley(" + std::to_string(n_) + ")";
    case GraphKind::kRandomRegular:
      return "random_regular(" + std::to_string(n_) + "," + std::to_string(d_) + ")";
    case GraphKind::kLoaded:
      return "loaded(" + std::to_string(n_) + "," + std::to_string(d_) + ")";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// SparseGraph

SparseGraph SparseGraph::FromEdges(std::size_t n, std::span<const Edge> edges) {
  SparseGraph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    CheckVertex(e.u, n);
    CheckVertex(e.v, n);
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

std::size_t SparseGraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool SparseGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EdgeCoin / PercolatedGraph

EdgeCoin::EdgeCoin(double p, std::uint64_t seed)
    : p_(p), seed_(seed), seed_key_(Mix64(seed ^ 0x5eed5eed5eed5eedULL)) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("retention probability must lie in [0, 1]");
  always_ = p >= 1.0;
  // threshold = floor(p * 2^64), computed without overflow.
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  threshold_ = always_ ? ~0ULL : static_cast<std::uint64_t>(scaled);
}

PercolatedGraph::PercolatedGraph(std::shared_ptr<const RegularGraph> host,
                                 double p, std::uint64_t seed)
    : host_(std::move(host)), p_(p), seed_(seed), keyed_(true) {
  if (!host_) throw InputError("percolation needs a host graph");
  const EdgeCoin coin(p, seed);
  const std::vector<Edge> kept = kernels::RetainedEdgesParallel(*host_, coin);
  graph_ = SparseGraph::FromEdges(host_->n(), kept);
}

PercolatedGraph PercolatedGraph::FromRetainedEdges(
    std::shared_ptr<const RegularGraph> host, std::span<const Edge> retained) {
  if (!host) throw InputError("percolation needs a host graph");
  for (const Edge& e : retained) {
    if (!host->adjacent(e.u, e.v)) {
      throw InputError("retained edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} is not a host edge");
    }
  }
  PercolatedGraph g;
  g.host_ = std::move(host);
  g.graph_ = SparseGraph::FromEdges(g.host_->n(), retained);
  const auto total = g.host_->num_edges();
  g.p_ = total == 0 ? 0.0 : static_cast<double>(g.graph_.num_edges()) / static_cast<double>(total);
  g.keyed_ = false;
  return g;
}

bool PercolatedGraph::retained(Vertex u, Vertex v) const {
  return graph_.has_edge(u, v);
}

std::span<const Vertex> PercolatedGraph::neighbors(Vertex v) const {
  CheckVertex(v, n());
  return graph_.neighbors(v);
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::Range(std::size_t n) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  VertexSet s;
  s.members_ = std::move(all);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

// ---------------------------------------------------------------------------
// Set statistics and components

SetStats set_stats(const SparseGraph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("set_stats needs a nonempty set");
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> in(n, 0);
  for (Vertex v : s) {
    CheckVertex(v, n);
    in[v] = 1;
  }
  SetStats stats;
  std::vector<std::uint8_t> seen(n, 0);
  std::uint64_t internal_twice = 0;
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) {
        ++internal_twice;
      } else {
        ++stats.boundary_edges;
        if (!seen[u]) {
          seen[u] = 1;
          ++stats.external_neighbors;
        }
      }
    }
  }
  stats.internal_edges = internal_twice / 2;
  stats.is_connected = induces_connected(g, s.members());
  return stats;
}

SetStats set_stats(const PercolatedGraph& g, const VertexSet& s) {
  return set_stats(g.graph(), s);
}

bool induces_connected(const SparseGraph& g, std::span<const Vertex> members) {
  if (members.empty()) return false;
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> state(n, 0);  // 1 = member, 2 = reached
  for (Vertex v : members) {
    CheckVertex(v, n);
    state[v] = 1;
  }
  std::vector<Vertex> stack{members.front()};
  state[members.front()] = 2;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (state[u] == 1) {
        state[u] = 2;
        stack.push_back(u);
      }
    }
  }
  for (Vertex v : members) {
    if (state[v] != 2) return false;
  }
  return true;
}

VertexSet ComponentCensus::members(std::size_t index) const {
  std::vector<Vertex> out;
  out.reserve(sizes.at(index));
  for (Vertex v = 0; v < component_of.size(); ++v) {
    if (component_of[v] == index) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

ComponentCensus connected_components(const SparseGraph& g) {
  const std::size_t n = g.num_vertices();
  const std::vector<Vertex> label = kernels::ComponentLabelsParallel(g);
  // Labels are component minima, so label[v] == v marks one vertex per
  // component, visited in increasing order of representative.
  std::vector<std::size_t> size_of(n, 0);
  for (Vertex v = 0; v < n; ++v) ++size_of[label[v]];
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == v) reps.push_back(v);
  }
  std::stable_sort(reps.begin(), reps.end(), [&](Vertex a, Vertex b) {
    return size_of[a] > size_of[b];
  });
  ComponentCensus census;
  census.representatives = reps;
  census.sizes.reserve(reps.size());
  std::vector<std::uint32_t> index_of_rep(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    census.sizes.push_back(size_of[reps[i]]);
    index_of_rep[reps[i]] = static_cast<std::uint32_t>(i);
  }
  census.component_of.resize(n);
  for (Vertex v = 0; v < n; ++v) census.component_of[v] = index_of_rep[label[v]];
  return census;
}

ComponentCensus connected_components(const PercolatedGraph& g) {
  return connected_components(g.graph());
}

std::int64_t excess(const SparseGraph& g, const VertexSet& component) {
  const SetStats stats = set_stats(g, component);
  if (!stats.is_connected) throw InputError("excess needs a connected vertex set");
  return static_cast<std::int64_t>(stats.internal_edges) -
         static_cast<std::int64_t>(component.size()) + 1;
}

std::int64_t excess(const PercolatedGraph& g, const VertexSet& component) {
  return excess(g.graph(), component);
}

VertexSet InducedSubgraph::ToParent(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent.at(v));
  return VertexSet(std::move(out));
}

InducedSubgraph induce(const SparseGraph& g, const VertexSet& s) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(n, kAbsent);
  InducedSubgraph out;
  out.to_parent.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    CheckVertex(out.to_parent[i], n);
    local[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex u : g.neighbors(out.to_parent[i])) {
      if (local[u] != kAbsent && local[u] > i) {
        edges.push_back({static_cast<Vertex>(i), local[u]});
      }
    }
  }
  out.graph = SparseGraph::FromEdges(out.to_parent.size(), edges);
  return out;
}

}  // namespace giantlab
