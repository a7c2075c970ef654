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

#include "oimcut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oimcut/dynamics.hpp"

namespace oimcut {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_dims(const PhaseConfig& theta, const Graph& g) {
  if (theta.size() != g.num_vertices()) {
    throw std::invalid_argument("phase vector length does not match the graph");
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

double expected_cut(const PhaseConfig& theta, const Graph& g) {
  check_dims(theta, g);
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * circular_distance(theta[e.i], theta[e.j]);
  return total / kPi;
}

RoundingResult round_with_line(const PhaseConfig& theta, const Graph& g, double line_angle) {
  check_dims(theta, g);
  std::vector<int> s(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    s[i] = std::cos(theta[i] - line_angle) >= 0.0 ? 1 : -1;
  }
  RoundingResult result;
  result.spins = SpinConfig(std::move(s));
  result.cut = cut_value(g, result.spins);
  result.line_angle = line_angle;
  return result;
}

RoundingResult random_line_round(const PhaseConfig& theta, const Graph& g, std::uint64_t seed) {
  const double unit = static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53;
  return round_with_line(theta, g, kPi * unit);
}

MonteCarloCut monte_carlo_cut(const PhaseConfig& theta, const Graph& g, std::size_t trials,
                              std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("monte_carlo_cut: need at least 2 trials");
  check_dims(theta, g);
  MonteCarloCut mc;
  mc.trials = trials;
  mc.edge_frequency.assign(g.num_edges(), 0.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const RoundingResult r = random_line_round(theta, g, derive_seed(seed, t));
    sum += r.cut;
    sum_sq += r.cut * r.cut;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edges()[e];
      if (r.spins[edge.i] != r.spins[edge.j]) mc.edge_frequency[e] += 1.0;
    }
  }
  const double count = static_cast<double>(trials);
  mc.mean = sum / count;
  const double var = std::max(0.0, (sum_sq - count * mc.mean * mc.mean) / (count - 1.0));
  mc.standard_error = std::sqrt(var / count);
  for (double& f : mc.edge_frequency) f /= count;
  return mc;
}

AngleInterval edge_angle_interval(const PhaseConfig& theta, const Graph& g) {
  check_dims(theta, g);
  if (g.num_edges() == 0) throw std::invalid_argument("edge_angle_interval: graph has no edges");
  AngleInterval iv{kPi, 0.0};
  for (const Edge& e : g.edges()) {
    const double d = circular_distance(theta[e.i], theta[e.j]);
    iv.lo = std::min(iv.lo, d);
    iv.hi = std::max(iv.hi, d);
  }
  return iv;
}

Certificate certify_lower_bound(const PhaseConfig& theta, const Graph& g,
                                const CouplingFunction& f, double mu) {
  if (g.num_edges() == 0) throw std::invalid_argument("certify_lower_bound: graph has no edges");
  if (!(mu >= 0.0)) throw std::invalid_argument("certify_lower_bound: mu must be >= 0");
  const CouplingFunction& exact = f.exact();
  Certificate cert;
  cert.coupling = exact.name();
  cert.mu = mu;
  cert.expected_cut = expected_cut(theta, g);
  cert.interval = edge_angle_interval(theta, g);
  cert.ratio_used = ratio_over_interval(exact, cert.interval.lo, cert.interval.hi);
  cert.energy = PhaseEnergy(g, exact, mu).value(theta.values());
  const double half_gap = 0.5 * (g.total_weight() - cert.energy);
  // Every edge sits at distance 0 when the ratio diverges, so the expected
  // cut is 0 and 0 is the tight bound.
  cert.lower_bound = std::isinf(cert.ratio_used) ? 0.0 : cert.ratio_used * half_gap;
  return cert;
}

}  // namespace oimcut
