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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oimcut/simd/kernels.hpp"

namespace oimcut::simd {

bool avx2_compiled();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  return isa == Isa::avx2 ? &avx2_kernels() : &scalar_kernels();
}

const KernelTable* initial_table() {
  Isa isa = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("OIMCUT_ISA")) {
    const std::string_view v(env);
    if (v == "scalar") {
      isa = Isa::scalar;
    } else if (v == "avx2" && isa_supported(Isa::avx2)) {
      isa = Isa::avx2;
    }
  }
  return table_for(isa);
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("simd: size mismatch in ") + what);
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
  static const bool avx2 = avx2_compiled() && cpu_has_avx2();
  return avx2;
}

Isa active_isa() { return active_slot().load(std::memory_order_acquire)->isa; }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA '" + std::string(isa_name(isa)) + "' is not supported here");
  }
  active_slot().store(table_for(isa), std::memory_order_release);
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void sincos(std::span<const double> x, std::span<double> s, std::span<double> c) {
  require(s.size() == x.size() && c.size() == x.size(), "sincos");
  active_kernels().sincos(x.data(), s.data(), c.data(), x.size());
}

void cosine_series(std::span<const double> coeffs, std::span<const double> x,
                   std::span<double> value, std::span<double> deriv) {
  require(value.size() == x.size() && deriv.size() == x.size(), "cosine_series");
  active_kernels().cosine_series(coeffs.data(), coeffs.size(), x.data(), value.data(),
                                 deriv.data(), x.size());
}

void folded_quadratic(std::span<const double> x, std::span<double> value,
                      std::span<double> deriv) {
  require(value.size() == x.size() && deriv.size() == x.size(), "folded_quadratic");
  active_kernels().folded_quadratic(x.data(), value.data(), deriv.data(), x.size());
}

void gather_differences(std::span<const double> theta, std::span<const std::int32_t> u,
                        std::span<const std::int32_t> v, std::span<double> out) {
  require(u.size() == out.size() && v.size() == out.size(), "gather_differences");
  active_kernels().gather_differences(theta.data(), u.data(), v.data(), out.data(), out.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "dot");
  return active_kernels().dot(a.data(), b.data(), a.size());
}

}  // namespace oimcut::simd
