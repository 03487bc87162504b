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

#ifndef GIANTLAB_SRC_KERNELS_INTERNAL_HPP_
#define GIANTLAB_SRC_KERNELS_INTERNAL_HPP_

#include <span>
#include <vector>

#include "giantlab/kernels.hpp"

namespace giantlab::kernels::internal {

using StepFn = void (*)(const SparseGraph&, std::span<const double>,
                        std::span<double>);

// TV curve of the walk from `start`. With stop_at_threshold the curve ends at
// the first value <= threshold (BudgetExceeded past max_steps); otherwise it
// runs exactly max_steps steps.
std::vector<double> StartCurve(const SparseGraph& g, std::span<const double> pi,
                               Vertex start, double threshold,
                               std::size_t max_steps, bool stop_at_threshold,
                               StepFn step);

// Elementwise max of per-start curves; `at_end` holds the horizon values of
// starts whose curves ended early.
TvCurve AssembleCurve(const std::vector<std::vector<double>>& curves,
                      std::span<const Vertex> starts,
                      const std::vector<double>& at_end);

// Pull-form lazy step without threading, for use inside parallel regions.
void LazyStepPull(const SparseGraph& g, std::span<const double> in,
                  std::span<double> out);

}  // namespace giantlab::kernels::internal

#endif  // GIANTLAB_SRC_KERNELS_INTERNAL_HPP_
