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

// Batched inner loops of the phase dynamics.
//
// Every kernel has a scalar reference implementation and an AVX2/FMA
// implementation. The active implementation is chosen once at startup from
// CPU features (override with OIMCUT_ISA=scalar|avx2) and can be switched at
// runtime with set_active_isa(). Both implementations agree to a few ulps;
// tests/test_simd_equivalence.cpp pins the tolerances.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace oimcut::simd {

enum class Isa { scalar, avx2 };

/// Raw-pointer kernel signatures. All arrays have length n unless noted.
struct KernelTable {
  Isa isa;
  /// s[k] = sin(x[k]), c[k] = cos(x[k]).
  void (*sincos)(const double* x, double* s, double* c, std::size_t n);
  /// value[k] = sum_{m=0}^{terms-1} a[m] cos(m x[k]),
  /// deriv[k] = -sum_m m a[m] sin(m x[k]).
  void (*cosine_series)(const double* a, std::size_t terms, const double* x, double* value,
                        double* deriv, std::size_t n);
  /// value = 1 - 2 (r/pi)^2 with r = |x| folded to [0, pi]; deriv is the
  /// one-sided slope, set to 0 exactly at the corner r = pi.
  void (*folded_quadratic)(const double* x, double* value, double* deriv, std::size_t n);
  /// out[k] = theta[u[k]] - theta[v[k]].
  void (*gather_differences)(const double* theta, const std::int32_t* u, const std::int32_t* v,
                             double* out, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_kernels();
/// Falls back to the scalar table on targets without AVX2 support compiled in.
const KernelTable& avx2_kernels();

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
/// Throws std::invalid_argument when the ISA is not supported on this CPU.
void set_active_isa(Isa isa);
const KernelTable& active_kernels();

/// Restores the previously active ISA on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

// Span wrappers over the active table.
void sincos(std::span<const double> x, std::span<double> s, std::span<double> c);
void cosine_series(std::span<const double> coeffs, std::span<const double> x,
                   std::span<double> value, std::span<double> deriv);
void folded_quadratic(std::span<const double> x, std::span<double> value,
                      std::span<double> deriv);
void gather_differences(std::span<const double> theta, std::span<const std::int32_t> u,
                        std::span<const std::int32_t> v, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace oimcut::simd
