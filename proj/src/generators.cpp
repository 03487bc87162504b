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

#include "giantlab/generators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "giantlab/rng.hpp"

namespace giantlab {
namespace {

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool IsBlankOrComment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly `count` unsigned integers and nothing else.
bool ParseFields(const std::string& line, std::size_t count,
                 std::vector<std::uint64_t>& out) {
  std::istringstream ss(line);
  out.clear();
  std::string token;
  while (ss >> token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
    try {
      out.push_back(std::stoull(token));
    } catch (const std::exception&) {
      return false;
    }
  }
  return out.size() == count;
}

using Code = ValidationError::Code;

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

RegularGraph gen_complete(std::size_t n) { return RegularGraph::Complete(n); }

RegularGraph gen_paley(std::size_t q) {
  if (!is_prime(q)) throw InputError("paley: q = " + std::to_string(q) + " is not prime");
  if (q % 4 != 1) throw InputError("paley: q must be 1 mod 4");
  // Euler's criterion: x is a nonzero square iff x^((q-1)/2) == 1 (mod q).
  std::vector<std::uint8_t> residue(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    residue[x] = PowMod(x, (q - 1) / 2, q) == 1 ? 1 : 0;
  }
  return RegularGraph::Paley(q, std::move(residue));
}

RegularGraph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n) throw InputError("random_regular: need d < n");
  if ((n * d) % 2 != 0) throw InputError("random_regular: n*d must be even");
  Rng rng(seed);
  std::vector<Vertex> stubs(n * d);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / d);
  std::vector<Edge> pairs(stubs.size() / 2);
  for (int attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool simple = true;
    for (std::size_t i = 0; i < pairs.size() && simple; ++i) {
      Vertex a = stubs[2 * i], b = stubs[2 * i + 1];
      if (a == b) simple = false;
      pairs[i] = {std::min(a, b), std::max(a, b)};
    }
    if (!simple) continue;
    std::vector<Edge> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

    std::vector<Vertex> table(n * d);
    std::vector<std::size_t> fill(n, 0);
    for (const Edge& e : sorted) {
      table[e.u * d + fill[e.u]++] = e.v;
      table[e.v * d + fill[e.v]++] = e.u;
    }
    return RegularGraph::FromNeighborTable(GraphKind::kRandomRegular, n, d,
                                           std::move(table));
  }
  throw GenerationError("random_regular(" + std::to_string(n) + "," +
                        std::to_string(d) + "): no simple pairing in " +
                        std::to_string(kMaxPairingAttempts) + " attempts");
}

RegularGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> f;

  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    if (!ParseFields(line, 3, f)) {
      throw ValidationError(Code::kMalformedHeader, line_no, "expected header \"n m d\"");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw ValidationError(Code::kMalformedHeader, line_no, "missing header");
  const std::size_t header_line = line_no;
  const std::uint64_t n = f[0], m = f[1], d = f[2];
  if (n == 0 || n > 0xffffffffULL || d >= n) {
    throw ValidationError(Code::kMalformedHeader, header_line, "need 0 <= d < n < 2^32");
  }

  std::vector<std::vector<Vertex>> adj(n);
  std::uint64_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    if (!ParseFields(line, 2, f)) {
      throw ValidationError(Code::kMalformedLine, line_no, "expected \"u v\"");
    }
    const std::uint64_t u = f[0], v = f[1];
    if (u >= n || v >= n) {
      throw ValidationError(Code::kVertexOutOfRange, line_no, "vertex id out of range");
    }
    if (u == v) throw ValidationError(Code::kSelfLoop, line_no, "self-loop");
    if (u > v) throw ValidationError(Code::kNonCanonicalOrder, line_no, "need u < v");
    if (++count > m) {
      throw ValidationError(Code::kEdgeCountMismatch, line_no,
                            "more than " + std::to_string(m) + " edges");
    }
    auto& row = adj[u];
    if (std::find(row.begin(), row.end(), static_cast<Vertex>(v)) != row.end()) {
      throw ValidationError(Code::kDuplicateEdge, line_no, "duplicate edge");
    }
    row.push_back(static_cast<Vertex>(v));
    adj[v].push_back(static_cast<Vertex>(u));
    for (std::uint64_t w : {u, v}) {
      if (adj[w].size() > d) {
        throw ValidationError(Code::kIrregularDegree, line_no,
                              "vertex " + std::to_string(w) + " exceeds degree " +
                                  std::to_string(d));
      }
    }
  }
  if (count != m) {
    throw ValidationError(Code::kEdgeCountMismatch, line_no,
                          "expected " + std::to_string(m) + " edges, found " +
                              std::to_string(count));
  }
  for (std::uint64_t v = 0; v < n; ++v) {
    if (adj[v].size() != d) {
      throw ValidationError(Code::kIrregularDegree, header_line,
                            "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(adj[v].size()) + ", header says " +
                                std::to_string(d));
    }
  }
  std::vector<Vertex> table;
  table.reserve(n * d);
  for (auto& row : adj) table.insert(table.end(), row.begin(), row.end());
  return RegularGraph::FromNeighborTable(GraphKind::kLoaded, n, d, std::move(table));
}

RegularGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in);
}

RegularGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (IsBlankOrComment(line)) continue;
    std::istringstream ss(line);
    std::string tag, kind;
    std::size_t size = 0;
    if (ss >> tag && tag == "implicit") {
      if (!(ss >> kind >> size)) {
        throw ValidationError(Code::kMalformedHeader, 0, "bad descriptor: " + line);
      }
      if (kind == "complete") return gen_complete(size);
      if (kind == "paley") return gen_paley(size);
      throw ValidationError(Code::kMalformedHeader, 0, "unknown implicit kind " + kind);
    }
    break;
  }
  in.clear();
  in.seekg(0);
  return parse_edge_list(in);
}

void write_edge_list(const RegularGraph& g, std::ostream& out) {
  out << g.n() << ' ' << g.num_edges() << ' ' << g.d() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(const RegularGraph& g, std::ostream& out) {
  if (g.kind() == GraphKind::kComplete) {
    out << "implicit complete " << g.n() << '\n';
  } else if (g.kind() == GraphKind::kPaley) {
    out << "implicit paley " << g.n() << '\n';
  } else {
    write_edge_list(g, out);
  }
}

}  // namespace giantlab
