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

#include "giantlab/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "giantlab/kernels.hpp"
#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

SpectralEstimate DenseEstimate(const RegularGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  SpectralEstimate out;
  out.lambda_hat = n < 2 ? 0.0 : std::max(std::abs(ev(n - 2)), std::abs(ev(0)));
  out.ratio = out.lambda_hat / static_cast<double>(g.d());
  out.certified = true;
  out.converged = true;
  return out;
}

void SubtractMean(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

double Norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

struct PowerRun {
  double value = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

PowerRun RunPower(const RegularGraph& g, const SpectralOptions& opt, std::uint64_t seed) {
  const std::size_t n = g.n();
  Rng rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(n), y(n);
  for (double& v : x) v = normal(rng);
  SubtractMean(x);
  double nx = Norm(x);
  PowerRun run;
  if (nx == 0.0) return run;
  for (double& v : x) v /= nx;

  double prev = 0.0;
  for (std::size_t it = 1; it <= opt.max_iter; ++it) {
    kernels::AdjacencyMultiplyParallel(g, x, y);
    // (d/n)J x vanishes for mean-zero x; re-projecting removes drift.
    SubtractMean(y);
    const double norm = Norm(y);
    run.iterations = it;
    if (norm == 0.0) {
      run.value = 0.0;
      run.converged = true;
      run.residual = 0.0;
      return run;
    }
    run.value = std::max(run.value, norm);
    run.residual = std::abs(norm - prev) / norm;
    if (it > 1 && run.residual <= opt.tol) {
      run.converged = true;
      return run;
    }
    prev = norm;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return run;
}

std::uint64_t CountIncidences(const RegularGraph& g, const VertexSet& a,
                              const std::vector<std::uint8_t>& in_b) {
  std::uint64_t count = 0;
  for (Vertex v : a) {
    g.ForEachNeighbor(v, [&](Vertex u) { count += in_b[u]; });
  }
  return count;
}

EmlRecord MakeRecord(double d, double n, double lambda, std::uint64_t observed,
                     double sa, double sb) {
  EmlRecord r;
  r.observed = observed;
  r.predicted = d * sa * sb / n;
  r.bound = lambda * std::sqrt(std::max(0.0, sa * sb * (1.0 - sa / n) * (1.0 - sb / n)));
  r.violated = std::abs(static_cast<double>(observed) - r.predicted) > r.bound + kEmlSlack;
  return r;
}

VertexSet FromMask(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace

SpectralEstimate estimate_lambda(const RegularGraph& g, const SpectralOptions& opt) {
  if (g.n() <= opt.dense_limit && !opt.force_iterative) return DenseEstimate(g);
  SpectralEstimate best;
  bool first = true;
  for (std::size_t r = 0; r < std::max<std::size_t>(1, opt.restarts); ++r) {
    const PowerRun run = RunPower(g, opt, DeriveSeed(opt.seed, r));
    best.iterations += run.iterations;
    if (first || run.value > best.lambda_hat) {
      best.lambda_hat = run.value;
      best.residual = run.residual;
      best.converged = run.converged;
      first = false;
    }
  }
  best.lambda_hat = std::min(best.lambda_hat, static_cast<double>(g.d()));
  best.ratio = best.lambda_hat / static_cast<double>(g.d());
  best.certified = false;
  return best;
}

EmlRecord eml_discrepancy(const RegularGraph& g, double lambda, const VertexSet& a,
                          const VertexSet& b) {
  if (a.empty() || b.empty()) throw InputError("eml_discrepancy needs nonempty sets");
  std::vector<std::uint8_t> in_b(g.n(), 0);
  for (Vertex v : b) {
    if (v >= g.n()) throw InputError("vertex out of range");
    in_b[v] = 1;
  }
  for (Vertex v : a) {
    if (v >= g.n()) throw InputError("vertex out of range");
  }
  return MakeRecord(static_cast<double>(g.d()), static_cast<double>(g.n()), lambda,
                    CountIncidences(g, a, in_b), static_cast<double>(a.size()),
                    static_cast<double>(b.size()));
}

EmlAuditResult eml_exhaustive(const RegularGraph& g, double lambda) {
  const std::size_t n = g.n();
  if (n > 12) throw BudgetExceeded("eml_exhaustive is limited to n <= 12");
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.ForEachNeighbor(v, [&](Vertex u) { adj[v] |= 1u << u; });
  }
  const std::uint32_t full = (1u << n) - 1;
  const double d = static_cast<double>(g.d()), nn = static_cast<double>(n);
  EmlAuditResult out;
  std::uint32_t worst_a = 0, worst_b = 0;
  for (std::uint32_t ma = 1; ma <= full; ++ma) {
    for (std::uint32_t mb = 1; mb <= full; ++mb) {
      std::uint64_t observed = 0;
      for (std::uint32_t rest = ma; rest; rest &= rest - 1) {
        observed += std::popcount(adj[std::countr_zero(rest)] & mb);
      }
      const EmlRecord r = MakeRecord(d, nn, lambda, observed, std::popcount(ma),
                                     std::popcount(mb));
      ++out.pairs_checked;
      if (r.violated) ++out.violations;
      if (r.bound == 0.0) {
        ++out.skipped_zero_bound;
        continue;
      }
      const double ratio = std::abs(static_cast<double>(observed) - r.predicted) / r.bound;
      if (ratio > out.worst_ratio) {
        out.worst_ratio = ratio;
        worst_a = ma;
        worst_b = mb;
      }
    }
  }
  out.worst_a = FromMask(worst_a);
  out.worst_b = FromMask(worst_b);
  return out;
}

EmlAuditResult eml_audit(const RegularGraph& g, double lambda, std::size_t num_samples,
                         std::uint64_t seed) {
  const std::size_t n = g.n();
  struct Sample {
    double ratio = 0.0;
    bool skipped = false;
    bool violated = false;
    VertexSet a, b;
  };
  std::vector<Sample> samples(num_samples);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < num_samples; ++i) {
    Rng rng(DeriveSeed(seed, i));
    std::vector<Vertex> perm(n);
    auto draw = [&]() {
      std::uniform_int_distribution<std::size_t> size_dist(1, n);
      const std::size_t k = size_dist(rng);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      for (std::size_t j = 0; j < k; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, n - 1);
        std::swap(perm[j], perm[pick(rng)]);
      }
      return VertexSet(
          std::vector<Vertex>(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k)));
    };
    Sample& s = samples[i];
    s.a = draw();
    s.b = draw();
    const EmlRecord r = eml_discrepancy(g, lambda, s.a, s.b);
    s.violated = r.violated;
    if (r.bound == 0.0) {
      s.skipped = true;
    } else {
      s.ratio = std::abs(static_cast<double>(r.observed) - r.predicted) / r.bound;
    }
  }
  EmlAuditResult out;
  for (Sample& s : samples) {
    ++out.pairs_checked;
    if (s.violated) ++out.violations;
    if (s.skipped) {
      ++out.skipped_zero_bound;
      continue;
    }
    if (s.ratio > out.worst_ratio || out.worst_a.empty()) {
      out.worst_ratio = s.ratio;
      out.worst_a = std::move(s.a);
      out.worst_b = std::move(s.b);
    }
  }
  return out;
}

LowDegreeSet low_degree_set(const RegularGraph& g, double lambda, const VertexSet& a,
                            double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (a.empty()) throw InputError("low_degree_set needs a nonempty A");
  const std::size_t n = g.n();
  std::vector<std::uint8_t> in_a(n, 0);
  for (Vertex v : a) {
    if (v >= n) throw InputError("vertex out of range");
    in_a[v] = 1;
  }
  LowDegreeSet out;
  const double nn = static_cast<double>(n), d = static_cast<double>(g.d());
  out.threshold = (1.0 - alpha) * static_cast<double>(a.size()) * d / nn;
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) continue;
    std::size_t into = 0;
    g.ForEachNeighbor(v, [&](Vertex u) { into += in_a[u]; });
    if (static_cast<double>(into) <= out.threshold) members.push_back(v);
  }
  out.members = VertexSet(std::move(members));
  const double delta = lambda / d;
  const double beta = static_cast<double>(a.size()) / nn;
  out.ceiling = delta * delta * nn / (alpha * alpha * beta);
  out.within_ceiling = static_cast<double>(out.members.size()) <= out.ceiling;
  return out;
}

}  // namespace giantlab
