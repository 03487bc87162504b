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

// Host-graph constructors and the edge-list wire format.
//
// Edge-list files: first line "n m d", then m lines "u v" with 0-based ids and
// u < v. Blank lines and lines starting with '#' are ignored. A descriptor
// file holds a single line "implicit complete N" or "implicit paley Q" and
// stands for an implicit host that is never written out edge by edge.

#ifndef GIANTLAB_GENERATORS_HPP_
#define GIANTLAB_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "giantlab/graph_core.hpp"

namespace giantlab {

inline constexpr int kMaxPairingAttempts = 10000;

RegularGraph gen_complete(std::size_t n);

// Throws InputError unless q is a prime with q % 4 == 1.
RegularGraph gen_paley(std::size_t q);

// Configuration model; any pairing with a loop or multi-edge is discarded
// whole. Throws GenerationError after kMaxPairingAttempts rejections.
RegularGraph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

bool is_prime(std::uint64_t q);

// Parses an edge list. Throws ValidationError naming the first offending line.
RegularGraph parse_edge_list(std::istream& in);
RegularGraph load_edge_list(const std::string& path);

// Loads either an edge list or a descriptor file.
RegularGraph load_graph_file(const std::string& path);

void write_edge_list(const RegularGraph& g, std::ostream& out);
// Descriptor for implicit hosts, edge list otherwise.
void write_graph(const RegularGraph& g, std::ostream& out);

}  // namespace giantlab

#endif  // GIANTLAB_GENERATORS_HPP_
