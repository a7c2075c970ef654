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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oimcut/integrator.hpp"
#include "oimcut/rounding.hpp"
#include "oimcut/solver.hpp"

namespace oimcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Everything needed to reproduce a solve run. Embedded verbatim in every
/// output artifact.
struct RunConfig {
  /// File path, or a generator description such as "er:n=30,p=0.2,seed=4".
  std::string graph_source;
  std::string coupling = "cos";
  double mu = 1.0;
  double k_coupling = 1.0;
  double rtol = 1e-3;
  double atol = 1e-6;
  double grad_tol = 1e-6;
  double t_max = 1e4;
  std::size_t record_every = 0;
  std::size_t restarts = 10;
  std::uint64_t seed = 0;
  std::size_t rounding_lines = 100;
  double eps = 0.15;
  std::string output_path;
  std::string trajectory_path;
  std::size_t trajectory_restart = 0;

  /// Throws std::invalid_argument on non-positive tolerances and similar.
  void validate() const;
  nlohmann::ordered_json to_json() const;
  /// FNV-1a 64 of the compact JSON form, as 16 hex digits.
  std::string hash() const;
  /// Resolves the coupling name and fills SolveOptions.
  SolveOptions to_solve_options() const;
};

nlohmann::ordered_json certificate_to_json(const Certificate& c);
nlohmann::ordered_json restart_to_json(const RestartResult& r);
/// Result document for a solve run, including a "timestamp" field that is
/// the only non-reproducible entry.
nlohmann::ordered_json solve_result_to_json(const RunConfig& cfg, const Graph& g,
                                            const SolveResult& result);

/// "t,theta_0,...,theta_{n-1},energy_exact,energy_smooth" plus one row per
/// recorded state.
std::string trajectory_csv(const Trajectory& traj);
nlohmann::ordered_json trajectory_metadata(const RunConfig& cfg, const RestartResult& r);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oimcut::cli
