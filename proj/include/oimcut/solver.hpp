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
#include <optional>
#include <vector>

#include "oimcut/coupling.hpp"
#include "oimcut/dynamics.hpp"
#include "oimcut/graph.hpp"
#include "oimcut/integrator.hpp"
#include "oimcut/ising.hpp"
#include "oimcut/rounding.hpp"

namespace oimcut {

struct SolveOptions {
  CouplingFunction coupling = CouplingFunction::cosine();
  /// Angle penalty; adds (mu/2) sum sin^2(theta_i) to the coupling energy.
  double mu = 1.0;
  double k_coupling = 1.0;
  IntegratorOptions integrator;
  std::size_t restarts = 10;
  /// Restart r starts from PhaseConfig::uniform_random(n, seed + r).
  std::uint64_t seed = 0;
  std::size_t rounding_lines = 100;
  double binarization_eps = 0.15;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
  /// Restart whose trajectory keeps every record_every-th state.
  std::optional<std::size_t> record_restart;
};

struct RestartResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  PhaseConfig initial;
  /// Final phases; rotated onto the binary axis when mu == 0, since the
  /// unpenalized flow is invariant under a common phase shift.
  PhaseConfig final_phases;
  Termination terminated_by = Termination::time_limit;
  double final_time = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double final_field_norm = 0.0;
  /// Energy under the exact coupling (plus penalty).
  double final_energy = 0.0;
  /// Energy under the coupling that drove the flow.
  double final_energy_smooth = 0.0;
  SpinConfig sign_spins;
  double sign_cut = 0.0;
  RoundingResult best_line;
  /// max(sign_cut, best_line.cut) and its spins.
  double cut = 0.0;
  SpinConfig spins;
  BinarizationReport binarization;
  Certificate certificate;
  /// Exact energies along the recorded states (initial and final at least).
  std::vector<double> recorded_energies;
  /// Flow-coupling energies at the same states.
  std::vector<double> recorded_energies_smooth;
  std::optional<Trajectory> trajectory;
};

struct SolveResult {
  std::vector<RestartResult> restarts;
  std::size_t best = 0;

  const RestartResult& best_restart() const { return restarts.at(best); }
  bool all_failed() const;
};

/// Total order of the best-of reduction: higher cut, then lower exact
/// energy, then lower restart index. True when a ranks before b.
bool ranks_before(const RestartResult& a, const RestartResult& b);

/// Runs `restarts` independent gradient flows of
///   L(theta) = sum_e w_e g(theta_u - theta_v) + (mu/2) sum_i sin^2(theta_i)
/// scaled by K, then rounds and certifies each final state. For g = cos this
/// is the oscillator network dtheta/dt = -K sum J sin(.) - K_s sin(2 theta)
/// with J = -A and K_s = K mu / 2.
/// Throws std::invalid_argument for couplings that are not differentiable
/// everywhere or for invalid parameters.
SolveResult solve_maxcut(const Graph& g, const SolveOptions& opts);

/// Single restart, exposed for tests and for the bench harness.
RestartResult run_restart(const Graph& g, const SolveOptions& opts, std::size_t index);

}  // namespace oimcut
