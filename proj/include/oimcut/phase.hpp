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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "oimcut/angles.hpp"

namespace oimcut {

/// Oscillator phases in radians, each stored reduced to [0, 2*pi).
class PhaseConfig {
 public:
  PhaseConfig() = default;

  /// Reduces every entry modulo 2*pi. Throws std::invalid_argument on
  /// non-finite input.
  explicit PhaseConfig(std::vector<double> theta) : theta_(std::move(theta)) {
    for (double& t : theta_) {
      if (!std::isfinite(t)) throw std::invalid_argument("PhaseConfig: non-finite phase");
      t = reduce_phase(t);
    }
  }

  /// n phases drawn independently and uniformly from [0, 2*pi).
  static PhaseConfig uniform_random(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    std::vector<double> theta(n);
    for (double& t : theta) t = dist(rng);
    return PhaseConfig(std::move(theta));
  }

  std::size_t size() const { return theta_.size(); }
  double operator[](std::size_t i) const { return theta_[i]; }
  std::span<const double> values() const { return theta_; }

  friend bool operator==(const PhaseConfig&, const PhaseConfig&) = default;

 private:
  std::vector<double> theta_;
};

}  // namespace oimcut
