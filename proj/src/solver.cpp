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

#include "oimcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace oimcut {

namespace {

void validate(const Graph& g, const SolveOptions& opts) {
  if (!opts.coupling.is_smooth_everywhere()) {
    throw std::invalid_argument("coupling '" + opts.coupling.name() +
                                "' is not differentiable everywhere; use a Fourier "
                                "expansion such as '" + opts.coupling.name() +
                                "-fourier:10' for the dynamics");
  }
  if (g.num_edges() == 0) throw std::invalid_argument("graph has no edges");
  if (!(opts.mu >= 0.0)) throw std::invalid_argument("mu must be >= 0");
  if (!(opts.k_coupling > 0.0)) throw std::invalid_argument("K must be > 0");
  if (opts.restarts == 0) throw std::invalid_argument("restarts must be >= 1");
  if (!(opts.binarization_eps > 0.0)) throw std::invalid_argument("eps must be > 0");
}

}  // namespace

bool SolveResult::all_failed() const {
  return std::all_of(restarts.begin(), restarts.end(), [](const RestartResult& r) {
    return r.terminated_by == Termination::step_failure;
  });
}

bool ranks_before(const RestartResult& a, const RestartResult& b) {
  if (a.cut != b.cut) return a.cut > b.cut;
  if (a.final_energy != b.final_energy) return a.final_energy < b.final_energy;
  return a.index < b.index;
}

RestartResult run_restart(const Graph& g, const SolveOptions& opts, std::size_t index) {
  validate(g, opts);
  RestartResult r;
  r.index = index;
  r.seed = opts.seed + index;
  r.initial = PhaseConfig::uniform_random(g.num_vertices(), r.seed);

  const PhaseEnergy flow_energy(g, opts.coupling, opts.mu);
  const PhaseEnergy exact_energy(g, opts.coupling.exact(), opts.mu);
  const double gain = opts.k_coupling;
  const VectorField field = [&](std::span<const double> y, std::span<double> dydt) {
    flow_energy.gradient(y, dydt);
    for (double& d : dydt) d *= -gain;
  };
  const EnergyProbes probes{
      [&](std::span<const double> y) { return exact_energy.value(y); },
      [&](std::span<const double> y) { return flow_energy.value(y); },
  };

  Trajectory traj = integrate_rkf45(field, r.initial, opts.integrator, probes);
  r.terminated_by = traj.terminated_by;
  r.final_time = traj.final_time();
  r.accepted_steps = traj.accepted_steps;
  r.rejected_steps = traj.rejected_steps;
  r.final_field_norm = traj.final_field_norm;
  r.recorded_energies = traj.energies;
  r.recorded_energies_smooth = traj.energies_smooth;

  r.final_phases = opts.mu == 0.0 ? align_to_binary_axis(traj.final_state()) : traj.final_state();
  r.final_energy = exact_energy.value(r.final_phases.values());
  r.final_energy_smooth = flow_energy.value(r.final_phases.values());

  r.sign_spins = spins_from_phases(r.final_phases);
  r.sign_cut = cut_value(g, r.sign_spins);
  for (std::size_t k = 0; k < opts.rounding_lines; ++k) {
    RoundingResult line = random_line_round(r.final_phases, g, derive_seed(r.seed, k));
    if (k == 0 || line.cut > r.best_line.cut) r.best_line = std::move(line);
  }
  if (opts.rounding_lines > 0 && r.best_line.cut > r.sign_cut) {
    r.cut = r.best_line.cut;
    r.spins = r.best_line.spins;
  } else {
    r.cut = r.sign_cut;
    r.spins = r.sign_spins;
  }
  r.binarization = detect_binarization(r.final_phases, opts.binarization_eps);
  r.certificate = certify_lower_bound(r.final_phases, g, opts.coupling, opts.mu);
  if (opts.record_restart && *opts.record_restart == index) r.trajectory = std::move(traj);
  return r;
}

SolveResult solve_maxcut(const Graph& g, const SolveOptions& opts) {
  validate(g, opts);
  SolveResult result;
  result.restarts.resize(opts.restarts);

  std::size_t threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, opts.restarts);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= opts.restarts) return;
      try {
        result.restarts[i] = run_restart(g, opts, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(opts.restarts);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 1; i < result.restarts.size(); ++i) {
    if (ranks_before(result.restarts[i], result.restarts[result.best])) result.best = i;
  }
  return result;
}

}  // namespace oimcut
