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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "oimcut/phase.hpp"

namespace oimcut {

/// dydt = field(y). Implementations write every component of dydt.
using VectorField = std::function<void(std::span<const double> y, std::span<double> dydt)>;
using EnergyFn = std::function<double(std::span<const double> y)>;

struct IntegratorOptions {
  double rtol = 1e-3;
  double atol = 1e-6;
  double t_max = 1e4;
  /// Stop once the infinity norm of the field drops to this value.
  double grad_tol = 1e-6;
  /// Record every k-th accepted step; 0 keeps only the initial and final states.
  std::size_t record_every = 0;
  double initial_step = 1e-2;
  double min_step = 1e-12;
  /// Accepted-step budget; exhausting it ends the run as a step failure.
  std::size_t max_steps = 5'000'000;
  /// Reduce the state to [0, 2*pi) after every accepted step.
  bool wrap_phases = true;
};

enum class Termination { gradient_converged, time_limit, step_failure };

std::string_view termination_name(Termination t);

/// Energies recorded alongside the states. Missing probes record NaN.
struct EnergyProbes {
  EnergyFn exact;
  EnergyFn smooth;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseConfig> states;
  std::vector<double> energies;
  std::vector<double> energies_smooth;
  Termination terminated_by = Termination::time_limit;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double final_field_norm = 0.0;

  const PhaseConfig& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Adaptive Runge-Kutta-Fehlberg 4(5) integration of dtheta/dt = field.
///
/// The fourth-order solution is propagated and the embedded fifth-order
/// solution provides the error estimate. A step is accepted when
/// |err_i| <= atol + rtol * max(|y_i|, |y_new_i|) for every component; the
/// next step is h * clamp(0.9 * ratio^(-1/5), 0.2, 5).
Trajectory integrate_rkf45(const VectorField& field, const PhaseConfig& theta0,
                           const IntegratorOptions& opts, const EnergyProbes& probes = {});

}  // namespace oimcut
