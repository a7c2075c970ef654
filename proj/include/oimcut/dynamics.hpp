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
#include <span>
#include <vector>

#include "oimcut/coupling.hpp"
#include "oimcut/graph.hpp"
#include "oimcut/ising.hpp"
#include "oimcut/phase.hpp"

namespace oimcut {

/// Oscillator network parameters: coupling gain K and injection-locking
/// strength K_s. from_penalty() ties K_s = K * mu / 2.
struct PenaltyParams {
  double mu = 0.0;
  double k_coupling = 1.0;
  double k_lock = 0.0;

  static PenaltyParams from_penalty(double mu, double k_coupling = 1.0);
};

/// L(theta) = sum_e w_e g(theta_u - theta_v) + (mu/2) sum_i sin^2(theta_i).
///
/// Built from a graph with any coupling g, or from an Ising model with
/// w_e = -J_e and g = cos, which is the penalized rank-two objective. Holds
/// edge arrays in SoA form plus scratch buffers, so one instance must not be
/// shared between threads that evaluate concurrently.
class PhaseEnergy {
 public:
  PhaseEnergy(const Graph& g, CouplingFunction f, double mu = 0.0);
  PhaseEnergy(const IsingModel& m, double mu);

  std::size_t size() const { return n_; }
  double mu() const { return mu_; }
  const CouplingFunction& coupling() const { return coupling_; }

  double value(std::span<const double> theta) const;
  void gradient(std::span<const double> theta, std::span<double> grad) const;
  /// Returns the value and writes the gradient.
  double value_and_gradient(std::span<const double> theta, std::span<double> grad) const;

 private:
  void check(std::span<const double> theta) const;
  void penalty_terms(std::span<const double> theta) const;

  std::size_t n_;
  std::vector<std::int32_t> u_, v_;
  std::vector<double> w_;
  CouplingFunction coupling_;
  double mu_;
  mutable std::vector<double> diff_, value_buf_, deriv_buf_;
  mutable std::vector<double> sin_buf_, cos_buf_;
};

/// -sum_{i<j} J_ij cos(theta_i - theta_j) + (mu/2) sum_i sin^2(theta_i).
double energy_penalized(const PhaseConfig& theta, const IsingModel& m, double mu);
/// Component i: sum_{j != i} J_ij sin(theta_i - theta_j) + (mu/2) sin(2 theta_i).
std::vector<double> grad_penalized(const PhaseConfig& theta, const IsingModel& m, double mu);
/// Oscillator-network vector field
/// -K sum_{j != i} J_ij sin(theta_i - theta_j) - K_s sin(2 theta_i).
std::vector<double> oim_rhs(const PhaseConfig& theta, const IsingModel& m,
                            const PenaltyParams& p);

/// sum over edges of w_ij g(theta_i - theta_j).
double energy_general(const PhaseConfig& theta, const Graph& g, const CouplingFunction& f);
/// Component i: sum_{j != i} w_ij g'(theta_i - theta_j).
std::vector<double> grad_general(const PhaseConfig& theta, const Graph& g,
                                 const CouplingFunction& f);

struct BinarizationReport {
  /// Circular distance of every phase to the nearer of {0, pi}.
  std::vector<double> deviation;
  double max_deviation = 0.0;
  double eps = 0.0;
  bool all_binarized = true;
};

/// Throws std::invalid_argument unless eps > 0.
BinarizationReport detect_binarization(const PhaseConfig& theta, double eps);

/// Rotates all phases by the common offset c that minimizes
/// sum_i sin^2(theta_i - c), i.e. c = arg(sum_i exp(2 i theta_i)) / 2.
/// Energies that depend only on phase differences are unchanged.
PhaseConfig align_to_binary_axis(const PhaseConfig& theta);

}  // namespace oimcut
