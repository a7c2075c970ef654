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

#include "oimcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

namespace oimcut {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("graph must have at least one vertex");
  for (Edge& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.j >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                  ") out of range for n = " + std::to_string(n_));
    }
    if (e.i == e.j) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.i));
    if (!std::isfinite(e.w)) throw std::invalid_argument("non-finite edge weight");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i == b.i && a.j == b.j;
  });
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->i) + ", " +
                                std::to_string(dup->j) + ")");
  }
}

double Graph::total_weight() const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.w;
  return total;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

bool Graph::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct ContentLine {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::size_t parse_index(std::string_view field, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "invalid integer '" + std::string(field) + "'");
  }
  if (value < 1) throw ParseError(line, "vertex index " + std::string(field) + " < 1");
  return static_cast<std::size_t>(value);
}

double parse_weight(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid weight '" + std::string(field) + "'");
  }
  return value;
}

bool parse_count(std::string_view field, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<ContentLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    lines.push_back({number, std::move(fields)});
    if (end == text.size()) break;
  }

  std::size_t first = 0;
  std::size_t header_n = 0;
  bool has_header = false;
  if (!lines.empty() && lines[0].fields.size() == 2) {
    std::size_t n = 0;
    std::size_t m = 0;
    if (parse_count(lines[0].fields[0], n) && parse_count(lines[0].fields[1], m) &&
        m == lines.size() - 1) {
      has_header = true;
      header_n = n;
      first = 1;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(lines.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::size_t max_index = 0;
  for (std::size_t k = first; k < lines.size(); ++k) {
    const ContentLine& cl = lines[k];
    if (cl.fields.size() != 2 && cl.fields.size() != 3) {
      throw ParseError(cl.number, "expected 'i j' or 'i j w', got " +
                                      std::to_string(cl.fields.size()) + " fields");
    }
    std::size_t i = parse_index(cl.fields[0], cl.number);
    std::size_t j = parse_index(cl.fields[1], cl.number);
    double w = cl.fields.size() == 3 ? parse_weight(cl.fields[2], cl.number) : 1.0;
    if (i == j) throw ParseError(cl.number, "self-loop at vertex " + std::to_string(i));
    if (has_header && std::max(i, j) > header_n) {
      throw ParseError(cl.number, "vertex index exceeds header n = " + std::to_string(header_n));
    }
    max_index = std::max({max_index, i, j});
    edges.push_back({std::min(i, j) - 1, std::max(i, j) - 1, w});
    seen.emplace_back(edges.back().i, edges.back().j);
  }

  // Report duplicates with the line of the second occurrence.
  std::vector<std::size_t> order(seen.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (seen[order[k]] == seen[order[k - 1]]) {
      const auto [i, j] = seen[order[k]];
      throw ParseError(lines[first + order[k]].number,
                       "duplicate edge " + std::to_string(i + 1) + " " + std::to_string(j + 1));
    }
  }

  const std::size_t n = has_header ? header_n : max_index;
  if (n == 0) throw ParseError(number, "graph has no vertices");
  return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges());
  for (const Edge& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.i + 1);
    out += ' ';
    out += std::to_string(e.j + 1);
    out += ' ';
    out += format_weight(e.w);
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << write_edge_list(g) << '\n';
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_erdos_renyi: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_erdos_renyi: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) < p) edges.push_back({i, j, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("gen_random_cubic: n must be even and >= 4, got " +
                                std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> points(3 * n);
  for (;;) {
    for (std::size_t k = 0; k < points.size(); ++k) points[k] = k / 3;
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);
    bool simple = true;
    for (std::size_t k = 0; k < points.size() && simple; k += 2) {
      std::size_t a = std::min(points[k], points[k + 1]);
      std::size_t b = std::max(points[k], points[k + 1]);
      if (a == b) {
        simple = false;
        break;
      }
      for (const Edge& e : edges) {
        if (e.i == a && e.j == b) {
          simple = false;
          break;
        }
      }
      edges.push_back({a, b, 1.0});
    }
    if (simple) return Graph(n, std::move(edges));
  }
}

Graph gen_hypercube(unsigned d) {
  if (d < 1 || d > 24) throw std::invalid_argument("gen_hypercube: d must be in [1, 24]");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned b = 0; b < d; ++b) {
      std::size_t u = v ^ (std::size_t{1} << b);
      if (v < u) edges.push_back({v, u, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace oimcut
