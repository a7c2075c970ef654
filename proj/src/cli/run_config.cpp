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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include "oimcut/cli.hpp"
#include "oimcut/coupling.hpp"

namespace oimcut::cli {

using nlohmann::ordered_json;

void RunConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be a positive number");
    }
  };
  positive(k_coupling, "K");
  positive(rtol, "rtol");
  positive(atol, "atol");
  positive(grad_tol, "grad-tol");
  positive(t_max, "t-max");
  positive(eps, "eps");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("mu must be >= 0");
  if (restarts == 0) throw std::invalid_argument("restarts must be >= 1");
  if (!trajectory_path.empty() && trajectory_restart >= restarts) {
    throw std::invalid_argument("trajectory-restart must be < restarts");
  }
}

ordered_json RunConfig::to_json() const {
  return ordered_json{
      {"graph_source", graph_source},
      {"coupling", coupling},
      {"mu", mu},
      {"K", k_coupling},
      {"K_s", k_coupling * mu / 2.0},
      {"rtol", rtol},
      {"atol", atol},
      {"grad_tol", grad_tol},
      {"t_max", t_max},
      {"record_every", record_every},
      {"restarts", restarts},
      {"seed", seed},
      {"rounding_lines", rounding_lines},
      {"eps", eps},
      {"output_path", output_path},
      {"trajectory_path", trajectory_path},
      {"trajectory_restart", trajectory_restart},
  };
}

std::string RunConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SolveOptions RunConfig::to_solve_options() const {
  validate();
  SolveOptions opts;
  opts.coupling = parse_coupling(coupling);
  opts.mu = mu;
  opts.k_coupling = k_coupling;
  opts.integrator.rtol = rtol;
  opts.integrator.atol = atol;
  opts.integrator.grad_tol = grad_tol;
  opts.integrator.t_max = t_max;
  opts.integrator.record_every = record_every;
  opts.restarts = restarts;
  opts.seed = seed;
  opts.rounding_lines = rounding_lines;
  opts.binarization_eps = eps;
  if (!trajectory_path.empty()) opts.record_restart = trajectory_restart;
  return opts;
}

ordered_json certificate_to_json(const Certificate& c) {
  ordered_json ratio = std::isfinite(c.ratio_used) ? ordered_json(c.ratio_used) : ordered_json();
  return ordered_json{
      {"expected_cut", c.expected_cut},
      {"ratio_used", ratio},
      {"interval", {c.interval.lo, c.interval.hi}},
      {"lower_bound", c.lower_bound},
      {"energy", c.energy},
      {"coupling", c.coupling},
      {"mu", c.mu},
  };
}

ordered_json restart_to_json(const RestartResult& r) {
  return ordered_json{
      {"index", r.index},
      {"seed", r.seed},
      {"terminated_by", std::string(termination_name(r.terminated_by))},
      {"t_final", r.final_time},
      {"accepted_steps", r.accepted_steps},
      {"rejected_steps", r.rejected_steps},
      {"final_field_norm", r.final_field_norm},
      {"final_energy", r.final_energy},
      {"final_energy_smooth", r.final_energy_smooth},
      {"sign_cut", r.sign_cut},
      {"line_cut", r.best_line.cut},
      {"line_angle", r.best_line.line_angle},
      {"cut", r.cut},
      {"spins", r.spins.values()},
      {"final_phases", std::vector<double>(r.final_phases.values().begin(),
                                           r.final_phases.values().end())},
      {"binarization",
       {{"all_binarized", r.binarization.all_binarized},
        {"max_deviation", r.binarization.max_deviation},
        {"eps", r.binarization.eps}}},
      {"certificate", certificate_to_json(r.certificate)},
  };
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ordered_json solve_result_to_json(const RunConfig& cfg, const Graph& g,
                                  const SolveResult& result) {
  ordered_json restarts = ordered_json::array();
  for (const RestartResult& r : result.restarts) restarts.push_back(restart_to_json(r));
  const RestartResult& best = result.best_restart();
  std::size_t binarized = 0;
  for (const RestartResult& r : result.restarts) binarized += r.binarization.all_binarized ? 1 : 0;
  return ordered_json{
      {"config", cfg.to_json()},
      {"config_hash", cfg.hash()},
      {"graph",
       {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"total_weight", g.total_weight()}}},
      {"restarts", restarts},
      {"best",
       {{"restart", best.index},
        {"seed", best.seed},
        {"cut", best.cut},
        {"final_energy", best.final_energy},
        {"lower_bound", best.certificate.lower_bound},
        {"all_binarized", best.binarization.all_binarized},
        {"spins", best.spins.values()}}},
      {"binarization_rate",
       static_cast<double>(binarized) / static_cast<double>(result.restarts.size())},
      {"timestamp", utc_timestamp()},
  };
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  for (std::size_t i = 0; i < n; ++i) out += ",theta_" + std::to_string(i);
  out += ",energy_exact,energy_smooth\n";
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out += num(traj.times[k]);
    for (double t : traj.states[k].values()) out += "," + num(t);
    out += "," + num(traj.energies[k]) + "," + num(traj.energies_smooth[k]) + "\n";
  }
  return out;
}

ordered_json trajectory_metadata(const RunConfig& cfg, const RestartResult& r) {
  return ordered_json{
      {"seed", r.seed},
      {"restart", r.index},
      {"coupling", cfg.coupling},
      {"mu", cfg.mu},
      {"tolerances",
       {{"rtol", cfg.rtol}, {"atol", cfg.atol}, {"grad_tol", cfg.grad_tol}, {"t_max", cfg.t_max}}},
      {"terminated_by", std::string(termination_name(r.terminated_by))},
      {"config", cfg.to_json()},
      {"config_hash", cfg.hash()},
  };
}

}  // namespace oimcut::cli
