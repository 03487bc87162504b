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

#ifndef GIANTLAB_RNG_HPP_
#define GIANTLAB_RNG_HPP_

#include <cstdint>
#include <random>

namespace giantlab {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used as a stateless keyed hash.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for the i-th independent sub-stream of `seed` (per-sample, per-start).
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(Mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

}  // namespace giantlab

#endif  // GIANTLAB_RNG_HPP_
