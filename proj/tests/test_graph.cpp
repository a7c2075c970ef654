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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <stdexcept>

#include "oimcut/graph.hpp"
#include "test_support.hpp"

using namespace oimcut;

TEST_CASE("graph construction normalizes and validates") {
  const Graph g(3, {{2, 0, 1.0}, {1, 0, 2.0}});
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 2.0});
  CHECK(g.edges()[1] == Edge{0, 2, 1.0});
  CHECK(g.total_weight() == 3.0);
  CHECK_FALSE(g.is_unweighted());

  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, std::numeric_limits<double>::quiet_NaN()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, std::numeric_limits<double>::infinity()}}),
                  std::invalid_argument);
}

TEST_CASE("parse triangle with header") {
  const Graph g = parse_edge_list("3 3\n1 2\n2 3\n1 3");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.is_unweighted());
  CHECK(g.total_weight() == 3.0);
}

TEST_CASE("parse single weighted edge") {
  const Graph g = parse_edge_list("2 1\n1 2 5");
  REQUIRE(g.num_edges() == 1);
  CHECK(g.edges()[0] == Edge{0, 1, 5.0});
}

TEST_CASE("parse without header takes n from the largest index") {
  const Graph g = parse_edge_list("# path\n1 2\n\n2 3\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3 2\n1 2\n2 2") == 3);
  CHECK(line_of("3 2\n1 2\n1 2") == 3);
  CHECK(line_of("1 2\n0 2\n2 3") == 2);
  CHECK(line_of("1 2 x") == 1);
  CHECK(line_of("1 2 3 4") == 1);
  CHECK(line_of("# c\n1") == 2);
}

TEST_CASE("write triangle and empty graph") {
  CHECK(write_edge_list(parse_edge_list("3 3\n1 2\n2 3\n1 3")) == "3 3\n1 2 1\n1 3 1\n2 3 1");
  CHECK(write_edge_list(Graph(4, {})) == "4 0");
  CHECK(parse_edge_list("4 0") == Graph(4, {}));
}

TEST_CASE("parse after write is the identity on random graphs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> weight(-10.0, 10.0);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 40;
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    Graph base = gen_erdos_renyi(n, p, t);
    std::vector<Edge> edges = base.edges();
    if (t % 2 == 1) {
      for (Edge& e : edges) e.w = weight(rng);
    }
    const Graph g(n, edges);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
  }
}

TEST_CASE("edge-list files round-trip") {
  const Graph g = gen_random_cubic(10, 3);
  const auto path = std::filesystem::temp_directory_path() / "oimcut_test_graph.txt";
  write_edge_list_file(g, path.string());
  CHECK(read_edge_list_file(path.string()) == g);
  std::filesystem::remove(path);
  CHECK_THROWS(read_edge_list_file((path.string() + ".missing")));
}

TEST_CASE("erdos-renyi edge count is binomial") {
  const double mean = 4950.0 * 0.06;
  const double sigma = std::sqrt(4950.0 * 0.06 * 0.94);
  CHECK(mean == doctest::Approx(297.0));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_erdos_renyi(100, 0.06, seed);
    CHECK(std::fabs(static_cast<double>(g.num_edges()) - mean) <= 4.0 * sigma);
  }
}

TEST_CASE("erdos-renyi extremes and determinism") {
  CHECK(gen_erdos_renyi(12, 0.0, 5).num_edges() == 0);
  CHECK(gen_erdos_renyi(12, 1.0, 5).num_edges() == 66);
  CHECK(gen_erdos_renyi(1, 0.5, 5).num_edges() == 0);
  CHECK(gen_erdos_renyi(40, 0.3, 9) == gen_erdos_renyi(40, 0.3, 9));
  CHECK_FALSE(gen_erdos_renyi(40, 0.3, 9) == gen_erdos_renyi(40, 0.3, 10));
  CHECK_THROWS_AS(gen_erdos_renyi(10, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_erdos_renyi(0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("random cubic graphs are simple and 3-regular") {
  for (std::size_t n : {4U, 8U, 10U, 30U, 100U}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = gen_random_cubic(n, seed);
      CHECK(g.num_edges() == 3 * n / 2);
      for (std::size_t d : g.degrees()) CHECK(d == 3);
    }
  }
  CHECK(gen_random_cubic(8, 1) == gen_random_cubic(8, 1));
  CHECK_THROWS_AS(gen_random_cubic(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_cubic(2, 0), std::invalid_argument);
}

TEST_CASE("hypercube structure") {
  const Graph q3 = gen_hypercube(3);
  CHECK(q3.num_vertices() == 8);
  CHECK(q3.num_edges() == 12);
  for (std::size_t d : q3.degrees()) CHECK(d == 3);
  for (const Edge& e : q3.edges()) CHECK(std::popcount(e.i ^ e.j) == 1);

  const Graph q1 = gen_hypercube(1);
  CHECK(q1.num_vertices() == 2);
  CHECK(q1.num_edges() == 1);
  CHECK(gen_hypercube(5).num_edges() == 5 * 16);
  CHECK_THROWS_AS(gen_hypercube(0), std::invalid_argument);
}
