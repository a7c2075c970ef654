// Copyright 2026 The oimcut Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oimcut {

/// Undirected edge between vertices i < j (0-based) with weight w.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected weighted graph on vertices 0..n-1.
///
/// Edges are stored once per unordered pair with i < j, sorted
/// lexicographically. Self-loops, duplicate pairs and non-finite weights are
/// rejected at construction.
class Graph {
 public:
  /// Builds a graph from an edge list. Endpoint order within an edge does not
  /// matter; it is normalized to i < j.
  /// Throws std::invalid_argument on n == 0, out-of-range endpoints,
  /// self-loops, duplicate pairs or non-finite weights.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  double total_weight() const;
  std::vector<std::size_t> degrees() const;
  bool is_unweighted() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Error raised by parse_edge_list; line() is the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the whitespace-separated edge-list format.
///
/// Lines starting with '#' and blank lines are ignored. Edge lines are
/// "i j" or "i j w" with 1-based vertices. The first content line is read as
/// an "n m" header when it has two fields and exactly m edge lines follow;
/// otherwise it is an ordinary edge line and n is the largest index seen.
Graph parse_edge_list(std::string_view text);

/// "n m" header followed by one "i j w" line per edge, 1-based, sorted; no
/// trailing newline. Weights use the shortest round-trip decimal form.
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

/// G(n, p): every pair is included independently with probability p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Uniformly paired random 3-regular simple graph (configuration model with
/// rejection). n must be even and at least 4.
Graph gen_random_cubic(std::size_t n, std::uint64_t seed);

/// d-dimensional hypercube Q_d on 2^d vertices.
Graph gen_hypercube(unsigned d);

}  // namespace oimcut
