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

#include "giantlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "giantlab/generators.hpp"
#include "giantlab/metrics.hpp"
#include "giantlab/percolation.hpp"
#include "giantlab/spectral.hpp"

namespace giantlab {
namespace {

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

std::uint64_t ParseUnsigned(const std::string& text, const std::string& field) {
  const auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (text.empty() || !std::all_of(text.begin(), text.end(), digit)) {
    throw InputError(field + ": expected a nonnegative integer, got \"" + text + "\"");
  }
  return std::stoull(text);
}

std::string FormatDouble(double v) {
  if (!std::isfinite(v)) return "";
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::shared_ptr<const RegularGraph> build_graph(const std::string& spec, std::uint64_t seed) {
  const std::vector<std::string> parts = Split(spec, ':');
  if (parts.size() >= 2 && parts[0] == "complete" && parts.size() == 2) {
    return std::make_shared<const RegularGraph>(gen_complete(ParseUnsigned(parts[1], "graph")));
  }
  if (parts.size() == 2 && parts[0] == "paley") {
    return std::make_shared<const RegularGraph>(gen_paley(ParseUnsigned(parts[1], "graph")));
  }
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "random-regular") {
    const std::uint64_t own_seed = parts.size() == 4 ? ParseUnsigned(parts[3], "graph") : seed;
    return std::make_shared<const RegularGraph>(gen_random_regular(
        ParseUnsigned(parts[1], "graph"), ParseUnsigned(parts[2], "graph"), own_seed));
  }
  if (spec.empty()) throw InputError("graph: missing graph specification");
  return std::make_shared<const RegularGraph>(load_graph_file(spec));
}

std::vector<MetricSummary> summarize(const std::vector<TrialRow>& trials) {
  std::vector<MetricSummary> out;
  if (trials.empty()) return out;
  for (std::size_t k = 0; k < trials.front().values.size(); ++k) {
    MetricSummary s;
    s.name = trials.front().values[k].first;
    std::vector<double> xs;
    for (const TrialRow& row : trials) {
      const double v = row.values[k].second;
      if (std::isfinite(v)) xs.push_back(v);
    }
    s.count = xs.size();
    if (xs.empty()) {
      s.mean = s.stddev = s.min = s.max = std::nan("");
      out.push_back(s);
      continue;
    }
    double sum = 0.0;
    for (double v : xs) sum += v;
    s.mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double v : xs) sq += (v - s.mean) * (v - s.mean);
    s.stddev = xs.size() > 1 ? std::sqrt(sq / static_cast<double>(xs.size() - 1)) : 0.0;
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    out.push_back(s);
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (!(config.epsilon > 0.0)) throw InputError("epsilon: must be positive");
  if (config.trials < 1) throw InputError("trials: must be at least 1");
  const std::shared_ptr<const RegularGraph> host = build_graph(config.graph, config.seed);
  const SupercriticalParams params = supercritical_params(config.epsilon, host->d());

  ExperimentReport report;
  report.config = {{"graph", host->describe()},
                   {"n", host->n()},
                   {"d", host->d()},
                   {"epsilon", config.epsilon},
                   {"trials", config.trials},
                   {"seed", config.seed},
                   {"diameter", config.diameter},
                   {"mixing", config.mixing},
                   {"spectrum", config.spectrum}};
  const double n = static_cast<double>(host->n());
  report.theory = {{"p", params.p},
                   {"y", params.y},
                   {"theory_fraction", params.giant_fraction},
                   {"delta_ceiling", params.delta_ceiling},
                   {"excess_ceiling", config.epsilon * config.epsilon * n},
                   {"second_size_ceiling", 16.0 * std::log(n) / (config.epsilon * config.epsilon)}};
  if (config.epsilon < 1.0) {
    const ExpansionThresholds t = expansion_thresholds(host->n(), config.epsilon, config.constants);
    report.theory["s_min"] = t.s_min;
    report.theory["s_mid"] = t.s_mid;
    report.theory["s_max"] = t.s_max;
    report.theory["factor_connected"] = t.factor_connected;
    report.theory["factor_linear"] = t.factor_linear;
    report.theory["edge_factor"] = t.edge_factor;
  }
  if (config.spectrum) {
    SpectralOptions opt;
    opt.tol = config.tol;
    opt.seed = config.seed;
    const SpectralEstimate est = estimate_lambda(*host, opt);
    report.theory["lambda"] = est.converged || est.certified ? JsonNumber(est.lambda_hat) : Json();
    report.theory["lambda_ratio"] = est.converged || est.certified ? JsonNumber(est.ratio) : Json();
    report.theory["lambda_certified"] = est.certified;
    if (est.ratio > params.delta_ceiling) {
      report.warnings.push_back("lambda/d = " + FormatDouble(est.ratio) + " exceeds eps^4 = " +
                                FormatDouble(params.delta_ceiling));
    }
  }

  report.trials.resize(config.trials);
  std::vector<std::string> errors(config.trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < config.trials; ++i) {
    try {
      TrialRow& row = report.trials[i];
      row.trial = i;
      row.seed = config.seed + i;
      const PercolatedGraph g = percolate(host, config.epsilon, row.seed);
      const GiantCensus census = giant_census(g, config.epsilon);
      row.values = {{"retained_edges", static_cast<double>(g.num_retained_edges())},
                    {"L1_size", static_cast<double>(census.L1_size)},
                    {"L1_fraction", census.L1_fraction},
                    {"second_size", static_cast<double>(census.second_size)},
                    {"excess_L1", static_cast<double>(census.excess_L1)},
                    {"num_components", static_cast<double>(census.num_components)}};
      if (config.diameter || config.mixing) {
        const InducedSubgraph giant = induce(g.graph(), census.L1);
        if (config.diameter) {
          row.values.emplace_back("diameter", static_cast<double>(diameter_exact(giant.graph)));
        }
        if (config.mixing) {
          StartMode mode;
          mode.all = config.mixing_starts == 0;
          mode.count = config.mixing_starts;
          mode.seed = row.seed;
          double t_mix = std::nan("");
          if (giant.graph.num_edges() > 0) {
            t_mix = static_cast<double>(mixing_time_exact(giant.graph, mode).t_mix);
          }
          row.values.emplace_back("t_mix", t_mix);
        }
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  report.aggregates = summarize(report.trials);
  return report;
}

Json JsonNumber(double value) {
  if (!std::isfinite(value)) return Json();
  return Json(value);
}

Json to_json(const ExperimentReport& report, bool timestamp) {
  Json out;
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out["generated_at"] = buf;
  }
  out["config"] = report.config;
  out["theory"] = report.theory;
  Json trials = Json::array();
  for (const TrialRow& row : report.trials) {
    Json t = {{"trial", row.trial}, {"seed", row.seed}};
    for (const auto& [name, value] : row.values) t[name] = JsonNumber(value);
    trials.push_back(std::move(t));
  }
  out["trials"] = std::move(trials);
  Json agg = Json::object();
  for (const MetricSummary& s : report.aggregates) {
    agg[s.name] = {{"count", s.count},
                   {"mean", JsonNumber(s.mean)},
                   {"stddev", JsonNumber(s.stddev)},
                   {"min", JsonNumber(s.min)},
                   {"max", JsonNumber(s.max)}};
  }
  out["aggregates"] = std::move(agg);
  out["warnings"] = report.warnings;
  out["counterexample"] = report.counterexample;
  return out;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kTrialCsvHeader << '\n';
  for (const TrialRow& row : report.trials) {
    for (const auto& [name, value] : row.values) {
      out << row.trial << ',' << row.seed << ',' << name << ',' << FormatDouble(value) << '\n';
    }
  }
  return out.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

void emit_report(const ExperimentReport& report, OutputFormat format, const std::string& path,
                 bool timestamp) {
  if (format == OutputFormat::kCsv) {
    write_output(to_csv(report), path);
  } else {
    write_output(to_json(report, timestamp).dump(2) + "\n", path);
  }
}

}  // namespace giantlab
