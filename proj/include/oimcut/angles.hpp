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
#include <numbers>

namespace oimcut {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Representative of x modulo 2*pi in [-pi, pi].
inline double wrap_to_pi(double x) {
  return x - kTwoPi * std::nearbyint(x / kTwoPi);
}

/// Representative of x modulo 2*pi in [0, 2*pi).
inline double reduce_phase(double x) {
  double r = x - kTwoPi * std::floor(x / kTwoPi);
  // floor can land r on 2*pi when x is a tiny negative number.
  if (r >= kTwoPi) r = 0.0;
  if (r < 0.0) r = 0.0;
  return r;
}

/// Shortest distance between two angles on the unit circle, in [0, pi].
inline double circular_distance(double a, double b) {
  const double d = std::fabs(wrap_to_pi(a - b));
  return d > kPi ? kPi : d;
}

}  // namespace oimcut
