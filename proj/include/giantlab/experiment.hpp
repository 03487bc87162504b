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

// Trial farming and report serialization behind the giantlab CLI.

#ifndef GIANTLAB_EXPERIMENT_HPP_
#define GIANTLAB_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "giantlab/expansion_audit.hpp"
#include "giantlab/graph_core.hpp"

namespace giantlab {

using Json = nlohmann::ordered_json;

// "complete:N", "paley:Q", "random-regular:N:D[:SEED]", or a file path
// (edge list or descriptor). `seed` is used when a random-regular spec has no
// seed of its own.
std::shared_ptr<const RegularGraph> build_graph(const std::string& spec, std::uint64_t seed);

struct ExperimentConfig {
  std::string graph;
  double epsilon = 0.0;
  std::size_t trials = 1;
  std::uint64_t seed = 1;  // trial i uses seed + i
  bool diameter = false;
  bool mixing = false;
  bool spectrum = false;
  std::size_t mixing_starts = 0;  // 0: all starts
  ExpansionConstants constants;
  double tol = 1e-6;
};

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> values;  // fixed metric order
};

struct MetricSummary {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for one trial
  double min = 0.0;
  double max = 0.0;
};

struct ExperimentReport {
  Json config;
  Json theory;
  std::vector<TrialRow> trials;
  std::vector<MetricSummary> aggregates;
  std::vector<std::string> warnings;
  bool counterexample = false;
};

// Throws InputError naming the offending field for an invalid config.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::vector<MetricSummary> summarize(const std::vector<TrialRow>& trials);

// Non-finite numbers become null.
Json JsonNumber(double value);

Json to_json(const ExperimentReport& report, bool timestamp);

// Long format with the fixed header "trial,seed,metric,value".
inline constexpr const char* kTrialCsvHeader = "trial,seed,metric,value";
std::string to_csv(const ExperimentReport& report);

enum class OutputFormat { kJson, kCsv };

// Writes to `path`, or stdout when path is empty or "-". Throws IoError.
void emit_report(const ExperimentReport& report, OutputFormat format, const std::string& path,
                 bool timestamp = true);
void write_output(const std::string& text, const std::string& path);

}  // namespace giantlab

#endif  // GIANTLAB_EXPERIMENT_HPP_
