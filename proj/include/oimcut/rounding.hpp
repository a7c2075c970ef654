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
#include <string>
#include <vector>

#include "oimcut/angles.hpp"
#include "oimcut/coupling.hpp"
#include "oimcut/graph.hpp"
#include "oimcut/ising.hpp"
#include "oimcut/phase.hpp"

namespace oimcut {

struct RoundingResult {
  SpinConfig spins;
  double cut = 0.0;
  /// Angle of the line's normal vector, in [0, pi).
  double line_angle = 0.0;
};

/// Sum over edges of w_ij * circular_distance(theta_i, theta_j) / pi: the
/// expected cut of random_line_round.
double expected_cut(const PhaseConfig& theta, const Graph& g);

/// Splits the phases by a random line through the origin. The normal angle
/// phi is uniform on [0, pi) and derived from `seed` alone;
/// s_i = sign(cos(theta_i - phi)) with exact zeros sent to +1.
RoundingResult random_line_round(const PhaseConfig& theta, const Graph& g, std::uint64_t seed);

/// Same split for a given normal angle.
RoundingResult round_with_line(const PhaseConfig& theta, const Graph& g, double line_angle);

/// Seed of trial `index` in a family of rounding trials rooted at `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct MonteCarloCut {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
  /// Fraction of trials in which each edge was cut, in the graph's edge order.
  std::vector<double> edge_frequency;
};

/// Runs `trials` random-line roundings with seeds derive_seed(seed, t).
MonteCarloCut monte_carlo_cut(const PhaseConfig& theta, const Graph& g, std::size_t trials,
                              std::uint64_t seed);

struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Smallest and largest circular distance across edges. Throws
/// std::invalid_argument for a graph without edges.
AngleInterval edge_angle_interval(const PhaseConfig& theta, const Graph& g);

struct Certificate {
  double expected_cut = 0.0;
  /// min (2/pi) x / (1 - g(x)) over the interval; +infinity when the
  /// interval is [0, 0].
  double ratio_used = 0.0;
  AngleInterval interval;
  double lower_bound = 0.0;
  /// Energy in the chain: the coupling energy, plus (mu/2) sum sin^2 for
  /// the penalized variant.
  double energy = 0.0;
  std::string coupling;
  double mu = 0.0;
};

/// expected_cut(theta) >= ratio_used * (total_weight - energy) / 2, with
/// energy = energy_general(theta, g, f) + (mu/2) sum_i sin^2(theta_i). The
/// penalty only lowers the bound, so the chain holds for any mu >= 0.
/// Certificates always use f.exact(). Throws std::invalid_argument on an
/// empty edge set or mu < 0.
Certificate certify_lower_bound(const PhaseConfig& theta, const Graph& g,
                                const CouplingFunction& f, double mu = 0.0);

}  // namespace oimcut
