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
#include <span>
#include <vector>

#include "oimcut/graph.hpp"

namespace oimcut {

class PhaseConfig;

/// Coupling J_ij between spins i < j. The diagonal is never stored.
struct Coupling {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;
};

/// Ising model without external field on n spins.
class IsingModel {
 public:
  /// Throws std::invalid_argument on self-couplings, out-of-range indices,
  /// duplicate pairs or non-finite values.
  IsingModel(std::size_t n, std::vector<Coupling> couplings);

  std::size_t size() const { return n_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }

 private:
  std::size_t n_;
  std::vector<Coupling> couplings_;
};

/// Vector of +1/-1 spins.
class SpinConfig {
 public:
  SpinConfig() = default;
  /// Throws std::invalid_argument when an entry is not +1 or -1.
  explicit SpinConfig(std::vector<int> spins);

  std::size_t size() const { return spins_.size(); }
  int operator[](std::size_t i) const { return spins_[i]; }
  const std::vector<int>& values() const { return spins_; }
  SpinConfig flipped() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::vector<int> spins_;
};

/// H(s) = -sum_{i<j} J_ij s_i s_j.
double hamiltonian(const IsingModel& m, const SpinConfig& s);

/// Max-cut reduction: J_ij = -w_ij for every edge.
IsingModel maxcut_to_ising(const Graph& g);

/// Total weight of edges whose endpoints carry different spins.
double cut_value(const Graph& g, const SpinConfig& s);

/// sum_{i<j} a_ij s_i s_j, the objective minimized by the max-cut reduction.
double maxcut_ising_objective(const Graph& g, const SpinConfig& s);

struct MaxCutSolution {
  double value = 0.0;
  SpinConfig spins;
  /// True when exactly one unordered partition {V1, V2} attains the maximum.
  bool unique = false;
  /// Number of distinct maximizing unordered partitions.
  std::size_t num_maximizers = 0;
};

inline constexpr std::size_t kBruteForceMaxVertices = 30;

/// Exhaustive max-cut over 2^(n-1) configurations with spin 0 fixed to +1.
/// Throws std::invalid_argument when n > kBruteForceMaxVertices.
MaxCutSolution brute_force_maxcut(const Graph& g);

/// Hemisphere binarization: +1 when cos(theta_i) >= 0, otherwise -1.
SpinConfig spins_from_phases(const PhaseConfig& theta);

/// Binarized phases for a spin vector: 0 for +1 and pi for -1.
PhaseConfig phases_from_spins(const SpinConfig& s);

}  // namespace oimcut
