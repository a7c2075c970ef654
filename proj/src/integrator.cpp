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

#include "oimcut/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oimcut {

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::gradient_converged:
      return "gradient-converged";
    case Termination::time_limit:
      return "time-limit";
    case Termination::step_failure:
      return "step-failure";
  }
  return "unknown";
}

namespace {

// Fehlberg tableau.
constexpr double kA21 = 1.0 / 4.0;
constexpr double kA31 = 3.0 / 32.0, kA32 = 9.0 / 32.0;
constexpr double kA41 = 1932.0 / 2197.0, kA42 = -7200.0 / 2197.0, kA43 = 7296.0 / 2197.0;
constexpr double kA51 = 439.0 / 216.0, kA52 = -8.0, kA53 = 3680.0 / 513.0,
                 kA54 = -845.0 / 4104.0;
constexpr double kA61 = -8.0 / 27.0, kA62 = 2.0, kA63 = -3544.0 / 2565.0,
                 kA64 = 1859.0 / 4104.0, kA65 = -11.0 / 40.0;
// Fourth-order weights.
constexpr double kB1 = 25.0 / 216.0, kB3 = 1408.0 / 2565.0, kB4 = 2197.0 / 4104.0,
                 kB5 = -1.0 / 5.0;
// Fifth-order minus fourth-order weights.
constexpr double kE1 = 16.0 / 135.0 - kB1;
constexpr double kE3 = 6656.0 / 12825.0 - kB3;
constexpr double kE4 = 28561.0 / 56430.0 - kB4;
constexpr double kE5 = -9.0 / 50.0 - kB5;
constexpr double kE6 = 2.0 / 55.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

Trajectory integrate_rkf45(const VectorField& field, const PhaseConfig& theta0,
                           const IntegratorOptions& opts, const EnergyProbes& probes) {
  if (!(opts.rtol > 0.0) || !(opts.atol > 0.0)) {
    throw std::invalid_argument("integrate_rkf45: rtol and atol must be positive");
  }
  if (!(opts.t_max > 0.0)) throw std::invalid_argument("integrate_rkf45: t_max must be positive");
  if (!field) throw std::invalid_argument("integrate_rkf45: empty vector field");

  const std::size_t n = theta0.size();
  std::vector<double> y(theta0.values().begin(), theta0.values().end());
  std::vector<double> y_new(n), err(n), stage(n);
  std::array<std::vector<double>, 6> k;
  for (auto& ki : k) ki.resize(n);

  Trajectory traj;
  double t = 0.0;
  auto record = [&](const std::vector<double>& state) {
    traj.times.push_back(t);
    traj.states.emplace_back(state);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    traj.energies.push_back(probes.exact ? probes.exact(state) : nan);
    traj.energies_smooth.push_back(probes.smooth ? probes.smooth(state) : nan);
  };
  record(y);
  bool last_recorded = true;

  field(y, k[0]);
  double h = std::min(opts.initial_step, opts.t_max);

  for (;;) {
    traj.final_field_norm = inf_norm(k[0]);
    if (traj.final_field_norm <= opts.grad_tol) {
      traj.terminated_by = Termination::gradient_converged;
      break;
    }
    if (t >= opts.t_max) {
      traj.terminated_by = Termination::time_limit;
      break;
    }
    if (h < opts.min_step || traj.accepted_steps >= opts.max_steps) {
      traj.terminated_by = Termination::step_failure;
      break;
    }
    const bool final_step = t + h >= opts.t_max;
    if (final_step) h = opts.t_max - t;

    for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + h * kA21 * k[0][i];
    field(stage, k[1]);
    for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + h * (kA31 * k[0][i] + kA32 * k[1][i]);
    field(stage, k[2]);
    for (std::size_t i = 0; i < n; ++i) {
      stage[i] = y[i] + h * (kA41 * k[0][i] + kA42 * k[1][i] + kA43 * k[2][i]);
    }
    field(stage, k[3]);
    for (std::size_t i = 0; i < n; ++i) {
      stage[i] = y[i] + h * (kA51 * k[0][i] + kA52 * k[1][i] + kA53 * k[2][i] + kA54 * k[3][i]);
    }
    field(stage, k[4]);
    for (std::size_t i = 0; i < n; ++i) {
      stage[i] = y[i] + h * (kA61 * k[0][i] + kA62 * k[1][i] + kA63 * k[2][i] +
                             kA64 * k[3][i] + kA65 * k[4][i]);
    }
    field(stage, k[5]);

    double ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y_new[i] = y[i] + h * (kB1 * k[0][i] + kB3 * k[2][i] + kB4 * k[3][i] + kB5 * k[4][i]);
      err[i] = h * (kE1 * k[0][i] + kE3 * k[2][i] + kE4 * k[3][i] + kE5 * k[4][i] +
                    kE6 * k[5][i]);
      const double scale =
          opts.atol + opts.rtol * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
      ratio = std::max(ratio, std::fabs(err[i]) / scale);
    }
    if (!std::isfinite(ratio)) {
      h *= kMinFactor;
      ++traj.rejected_steps;
      continue;
    }

    const double factor =
        ratio == 0.0 ? kMaxFactor
                     : std::clamp(kSafety * std::pow(ratio, -0.2), kMinFactor, kMaxFactor);
    if (ratio <= 1.0) {
      t = final_step ? opts.t_max : t + h;
      if (opts.wrap_phases) {
        for (double& v : y_new) v = reduce_phase(v);
      }
      std::swap(y, y_new);
      ++traj.accepted_steps;
      field(y, k[0]);
      last_recorded = opts.record_every != 0 && traj.accepted_steps % opts.record_every == 0;
      if (last_recorded) record(y);
      h *= factor;
    } else {
      ++traj.rejected_steps;
      h *= std::min(factor, 1.0);
    }
  }

  if (!last_recorded) record(y);
  return traj;
}

}  // namespace oimcut
