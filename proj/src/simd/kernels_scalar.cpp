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

// Reference kernels. These follow the defining formulas directly and are the
// yardstick for the vectorized variants.

#include <cmath>

#include "oimcut/angles.hpp"
#include "oimcut/simd/kernels.hpp"

namespace oimcut::simd {
namespace {

void sincos_scalar(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    s[k] = std::sin(x[k]);
    c[k] = std::cos(x[k]);
  }
}

void cosine_series_scalar(const double* a, std::size_t terms, const double* x, double* value,
                          double* deriv, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    double v = terms > 0 ? a[0] : 0.0;
    double d = 0.0;
    for (std::size_t m = 1; m < terms; ++m) {
      const double mx = static_cast<double>(m) * x[k];
      v += a[m] * std::cos(mx);
      d -= static_cast<double>(m) * a[m] * std::sin(mx);
    }
    value[k] = v;
    deriv[k] = d;
  }
}

void folded_quadratic_scalar(const double* x, double* value, double* deriv, std::size_t n) {
  constexpr double kInvPi = 1.0 / kPi;
  for (std::size_t k = 0; k < n; ++k) {
    const double y = wrap_to_pi(x[k]);
    const double r = std::fabs(y) * kInvPi;
    value[k] = 1.0 - 2.0 * r * r;
    deriv[k] = r >= 1.0 ? 0.0 : -4.0 * (y * kInvPi) * kInvPi;
  }
}

void gather_differences_scalar(const double* theta, const std::int32_t* u, const std::int32_t* v,
                               double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = theta[u[k]] - theta[v[k]];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[k];
  return acc;
}

constexpr KernelTable kScalarTable{
    Isa::scalar,
    &sincos_scalar,
    &cosine_series_scalar,
    &folded_quadratic_scalar,
    &gather_differences_scalar,
    &dot_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace oimcut::simd
