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

#include <cmath>
#include <stdexcept>

#include "oimcut/solver.hpp"
#include "test_support.hpp"

using namespace oimcut;

namespace {

SolveOptions quick(CouplingFunction f, double mu, std::size_t restarts) {
  SolveOptions o;
  o.coupling = std::move(f);
  o.mu = mu;
  o.restarts = restarts;
  o.integrator.t_max = 1e3;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("hypercube under the smoothed quadratic coupling") {
  const Graph q3 = gen_hypercube(3);
  const SolveResult r = solve_maxcut(q3, quick(fourier_truncate(quadratic_g2(), 10), 0.0, 5));
  REQUIRE(r.restarts.size() == 5);
  CHECK(r.best_restart().cut == 12.0);
  CHECK(cut_value(q3, r.best_restart().spins) == 12.0);
  CHECK_FALSE(r.all_failed());
}

TEST_CASE("triangle under the cosine coupling") {
  const Graph tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const SolveResult r = solve_maxcut(tri, quick(cosine(), 0.0, 4));
  CHECK(r.best_restart().cut == 2.0);
  for (const RestartResult& x : r.restarts) {
    CHECK(x.cut == std::max(x.sign_cut, x.best_line.cut));
    CHECK(x.cut == cut_value(tri, x.spins));
  }
}

TEST_CASE("solver validation") {
  const Graph q3 = gen_hypercube(3);
  CHECK_THROWS_AS(solve_maxcut(q3, quick(quadratic_g2(), 0.0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_maxcut(Graph(3, {}), quick(cosine(), 1.0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_maxcut(q3, quick(cosine(), -1.0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_maxcut(q3, quick(cosine(), 1.0, 0)), std::invalid_argument);
  SolveOptions bad_k = quick(cosine(), 1.0, 1);
  bad_k.k_coupling = 0.0;
  CHECK_THROWS_AS(solve_maxcut(q3, bad_k), std::invalid_argument);
  SolveOptions bad_eps = quick(cosine(), 1.0, 1);
  bad_eps.binarization_eps = 0.0;
  CHECK_THROWS_AS(solve_maxcut(q3, bad_eps), std::invalid_argument);
}

TEST_CASE("thread count does not change results") {
  const Graph g = oimcut::testing::random_graph(24, 0.25, 11, true);
  SolveOptions a = quick(cosine(), 1.0, 6);
  a.seed = 42;
  SolveOptions b = a;
  b.threads = 4;
  const SolveResult ra = solve_maxcut(g, a);
  const SolveResult rb = solve_maxcut(g, b);
  REQUIRE(ra.restarts.size() == rb.restarts.size());
  CHECK(ra.best == rb.best);
  for (std::size_t k = 0; k < ra.restarts.size(); ++k) {
    CHECK(ra.restarts[k].final_phases == rb.restarts[k].final_phases);
    CHECK(ra.restarts[k].spins == rb.restarts[k].spins);
    CHECK(ra.restarts[k].accepted_steps == rb.restarts[k].accepted_steps);
  }
}

TEST_CASE("restart seeds, initial phases and the best-of order") {
  const Graph g = oimcut::testing::random_graph(16, 0.3, 12);
  SolveOptions o = quick(cosine(), 1.0, 5);
  o.seed = 100;
  const SolveResult r = solve_maxcut(g, o);
  for (std::size_t k = 0; k < r.restarts.size(); ++k) {
    const RestartResult& x = r.restarts[k];
    CHECK(x.index == k);
    CHECK(x.seed == 100 + k);
    CHECK(x.initial == PhaseConfig::uniform_random(16, 100 + k));
    CHECK_FALSE(ranks_before(x, r.best_restart()));
    CHECK_FALSE(ranks_before(x, x));
  }

  RestartResult lo, hi;
  lo.cut = 3.0;
  hi.cut = 4.0;
  CHECK(ranks_before(hi, lo));
  CHECK_FALSE(ranks_before(lo, hi));
  lo.cut = 4.0;
  lo.final_energy = -2.0;
  hi.final_energy = -1.0;
  CHECK(ranks_before(lo, hi));
  hi.final_energy = -2.0;
  lo.index = 1;
  hi.index = 0;
  CHECK(ranks_before(hi, lo));
}

TEST_CASE("only the selected restart keeps its trajectory") {
  const Graph g = gen_hypercube(3);
  SolveOptions o = quick(cosine(), 1.0, 3);
  o.record_restart = 1;
  o.integrator.record_every = 2;
  const SolveResult r = solve_maxcut(g, o);
  CHECK_FALSE(r.restarts[0].trajectory.has_value());
  REQUIRE(r.restarts[1].trajectory.has_value());
  CHECK_FALSE(r.restarts[2].trajectory.has_value());
  const Trajectory& tr = *r.restarts[1].trajectory;
  CHECK(tr.states.front() == r.restarts[1].initial);
  CHECK(tr.times.size() == r.restarts[1].recorded_energies.size());
  for (const RestartResult& x : r.restarts) CHECK(x.recorded_energies.size() >= 2);
}

TEST_CASE("every restart carries a valid certificate") {
  for (std::uint64_t t = 0; t < 4; ++t) {
    const Graph g = oimcut::testing::random_graph(12, 0.35, 20 + t, t % 2 == 0);
    const double w_mc = brute_force_maxcut(g).value;
    for (const auto& [f, mu] : {std::pair{cosine(), 1.0}, std::pair{cosine(), 0.0},
                                std::pair{fourier_truncate(quadratic_g2(), 10), 0.0}}) {
      const SolveResult r = solve_maxcut(g, quick(f, mu, 3));
      for (const RestartResult& x : r.restarts) {
        const Certificate& c = x.certificate;
        CHECK(c.expected_cut >= c.lower_bound - 1e-9);
        CHECK(c.lower_bound <= w_mc + 1e-9);
        CHECK(x.cut <= w_mc);
        CHECK(c.mu == mu);
        CHECK(c.energy == doctest::Approx(x.final_energy).epsilon(1e-12));
      }
    }
  }
}
