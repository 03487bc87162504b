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

#ifndef GIANTLAB_ERROR_HPP_
#define GIANTLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace giantlab {

// Bad arguments: out-of-range vertices, empty sets, invalid parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Edge-list validation failure. `line` is 1-based; 0 when the failure is not
// tied to a single line.
class ValidationError : public std::runtime_error {
 public:
  enum class Code {
    kMalformedHeader,
    kMalformedLine,
    kVertexOutOfRange,
    kSelfLoop,
    kNonCanonicalOrder,
    kDuplicateEdge,
    kEdgeCountMismatch,
    kIrregularDegree,
  };

  ValidationError(Code code, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        code_(code),
        line_(line) {}

  Code code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

// Random generation gave up (rejection budget exhausted).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its combinatorial budget; the caller
// should switch to a sampled mode.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace giantlab

#endif  // GIANTLAB_ERROR_HPP_
