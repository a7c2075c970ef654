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

// AVX2 + FMA kernels, 4 doubles per lane group. This translation unit is the
// only one compiled with -mavx2 -mfma; callers reach it through the dispatch
// table so the rest of the library stays baseline x86-64.

#include "oimcut/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <algorithm>

#include "oimcut/angles.hpp"

namespace oimcut::simd {
namespace {

constexpr std::size_t kLanes = 4;

// pi/2 split into three parts for Cody-Waite reduction (fdlibm constants).
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050630396597660e-11;
constexpr double kPio2Lo = 2.02226624871116645580e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

// Minimax coefficients on [-pi/4, pi/4] (fdlibm __kernel_sin / __kernel_cos).
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;
constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

inline void sincos_pd(__m256d x, __m256d& s, __m256d& c) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, set1(kTwoOverPi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(q, set1(kPio2Hi), x);
  r = _mm256_fnmadd_pd(q, set1(kPio2Mid), r);
  r = _mm256_fnmadd_pd(q, set1(kPio2Lo), r);

  const __m256d r2 = _mm256_mul_pd(r, r);
  __m256d ps = _mm256_fmadd_pd(r2, set1(kS6), set1(kS5));
  ps = _mm256_fmadd_pd(r2, ps, set1(kS4));
  ps = _mm256_fmadd_pd(r2, ps, set1(kS3));
  ps = _mm256_fmadd_pd(r2, ps, set1(kS2));
  ps = _mm256_fmadd_pd(r2, ps, set1(kS1));
  const __m256d sr = _mm256_fmadd_pd(_mm256_mul_pd(r2, r), ps, r);

  __m256d pc = _mm256_fmadd_pd(r2, set1(kC6), set1(kC5));
  pc = _mm256_fmadd_pd(r2, pc, set1(kC4));
  pc = _mm256_fmadd_pd(r2, pc, set1(kC3));
  pc = _mm256_fmadd_pd(r2, pc, set1(kC2));
  pc = _mm256_fmadd_pd(r2, pc, set1(kC1));
  const __m256d r4 = _mm256_mul_pd(r2, r2);
  const __m256d cr =
      _mm256_fmadd_pd(r4, pc, _mm256_fnmadd_pd(set1(0.5), r2, set1(1.0)));

  // Quadrant q mod 4 selects (sin, cos) from (+-sr, +-cr).
  const __m256d quadrant =
      _mm256_sub_pd(q, _mm256_mul_pd(set1(4.0), _mm256_floor_pd(_mm256_mul_pd(q, set1(0.25)))));
  const __m256d odd = _mm256_sub_pd(
      quadrant, _mm256_mul_pd(set1(2.0), _mm256_floor_pd(_mm256_mul_pd(quadrant, set1(0.5)))));
  const __m256d swap = _mm256_cmp_pd(odd, set1(1.0), _CMP_EQ_OQ);
  const __m256d sin_neg = _mm256_cmp_pd(quadrant, set1(2.0), _CMP_GE_OQ);
  const __m256d cos_neg = _mm256_or_pd(_mm256_cmp_pd(quadrant, set1(1.0), _CMP_EQ_OQ),
                                       _mm256_cmp_pd(quadrant, set1(2.0), _CMP_EQ_OQ));
  const __m256d sign_bit = set1(-0.0);
  s = _mm256_xor_pd(_mm256_blendv_pd(sr, cr, swap), _mm256_and_pd(sin_neg, sign_bit));
  c = _mm256_xor_pd(_mm256_blendv_pd(cr, sr, swap), _mm256_and_pd(cos_neg, sign_bit));
}

// Runs `body(offset, count)` over full lane groups, then once more over a
// zero-padded tail so every element goes through the vector code path.
template <typename Body, typename Tail>
inline void for_each_block(std::size_t n, Body body, Tail tail) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) body(k);
  if (k < n) tail(k, n - k);
}

void sincos_avx2(const double* x, double* s, double* c, std::size_t n) {
  for_each_block(
      n,
      [&](std::size_t k) {
        __m256d vs, vc;
        sincos_pd(_mm256_loadu_pd(x + k), vs, vc);
        _mm256_storeu_pd(s + k, vs);
        _mm256_storeu_pd(c + k, vc);
      },
      [&](std::size_t k, std::size_t rest) {
        alignas(32) double bx[kLanes] = {}, bs[kLanes], bc[kLanes];
        std::copy_n(x + k, rest, bx);
        __m256d vs, vc;
        sincos_pd(_mm256_load_pd(bx), vs, vc);
        _mm256_store_pd(bs, vs);
        _mm256_store_pd(bc, vc);
        std::copy_n(bs, rest, s + k);
        std::copy_n(bc, rest, c + k);
      });
}

inline void cosine_series_pd(const double* a, std::size_t terms, __m256d x, __m256d& value,
                             __m256d& deriv) {
  value = _mm256_setzero_pd();
  deriv = _mm256_setzero_pd();
  if (terms == 0) return;
  value = set1(a[0]);
  if (terms == 1) return;
  __m256d s1, c1;
  sincos_pd(x, s1, c1);
  const __m256d two_c1 = _mm256_add_pd(c1, c1);
  // Chebyshev recurrences: cos((m+1)x) = 2 cos x cos(mx) - cos((m-1)x),
  // and likewise for sin.
  __m256d c_prev = set1(1.0), s_prev = _mm256_setzero_pd();
  __m256d c_cur = c1, s_cur = s1;
  for (std::size_t m = 1; m < terms; ++m) {
    value = _mm256_fmadd_pd(set1(a[m]), c_cur, value);
    deriv = _mm256_fnmadd_pd(set1(static_cast<double>(m) * a[m]), s_cur, deriv);
    const __m256d c_next = _mm256_fmsub_pd(two_c1, c_cur, c_prev);
    const __m256d s_next = _mm256_fmsub_pd(two_c1, s_cur, s_prev);
    c_prev = c_cur;
    s_prev = s_cur;
    c_cur = c_next;
    s_cur = s_next;
  }
}

void cosine_series_avx2(const double* a, std::size_t terms, const double* x, double* value,
                        double* deriv, std::size_t n) {
  for_each_block(
      n,
      [&](std::size_t k) {
        __m256d v, d;
        cosine_series_pd(a, terms, _mm256_loadu_pd(x + k), v, d);
        _mm256_storeu_pd(value + k, v);
        _mm256_storeu_pd(deriv + k, d);
      },
      [&](std::size_t k, std::size_t rest) {
        alignas(32) double bx[kLanes] = {}, bv[kLanes], bd[kLanes];
        std::copy_n(x + k, rest, bx);
        __m256d v, d;
        cosine_series_pd(a, terms, _mm256_load_pd(bx), v, d);
        _mm256_store_pd(bv, v);
        _mm256_store_pd(bd, d);
        std::copy_n(bv, rest, value + k);
        std::copy_n(bd, rest, deriv + k);
      });
}

inline void folded_quadratic_pd(__m256d x, __m256d& value, __m256d& deriv) {
  const __m256d inv_pi = set1(1.0 / kPi);
  const __m256d turns = _mm256_round_pd(_mm256_div_pd(x, set1(kTwoPi)),
                                        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d y = _mm256_fnmadd_pd(turns, set1(kTwoPi), x);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d r = _mm256_mul_pd(_mm256_and_pd(y, abs_mask), inv_pi);
  value = _mm256_fnmadd_pd(_mm256_mul_pd(set1(2.0), r), r, set1(1.0));
  const __m256d slope = _mm256_mul_pd(_mm256_mul_pd(set1(-4.0), _mm256_mul_pd(y, inv_pi)), inv_pi);
  const __m256d corner = _mm256_cmp_pd(r, set1(1.0), _CMP_GE_OQ);
  deriv = _mm256_andnot_pd(corner, slope);
}

void folded_quadratic_avx2(const double* x, double* value, double* deriv, std::size_t n) {
  for_each_block(
      n,
      [&](std::size_t k) {
        __m256d v, d;
        folded_quadratic_pd(_mm256_loadu_pd(x + k), v, d);
        _mm256_storeu_pd(value + k, v);
        _mm256_storeu_pd(deriv + k, d);
      },
      [&](std::size_t k, std::size_t rest) {
        alignas(32) double bx[kLanes] = {}, bv[kLanes], bd[kLanes];
        std::copy_n(x + k, rest, bx);
        __m256d v, d;
        folded_quadratic_pd(_mm256_load_pd(bx), v, d);
        _mm256_store_pd(bv, v);
        _mm256_store_pd(bd, d);
        std::copy_n(bv, rest, value + k);
        std::copy_n(bd, rest, deriv + k);
      });
}

void gather_differences_avx2(const double* theta, const std::int32_t* u, const std::int32_t* v,
                             double* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m128i iu = _mm_loadu_si128(reinterpret_cast<const __m128i*>(u + k));
    const __m128i iv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + k));
    const __m256d tu = _mm256_i32gather_pd(theta, iu, 8);
    const __m256d tv = _mm256_i32gather_pd(theta, iv, 8);
    _mm256_storeu_pd(out + k, _mm256_sub_pd(tu, tv));
  }
  for (; k < n; ++k) out[k] = theta[u[k]] - theta[v[k]];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
  }
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) total += a[k] * b[k];
  return total;
}

constexpr KernelTable kAvx2Table{
    Isa::avx2,
    &sincos_avx2,
    &cosine_series_avx2,
    &folded_quadratic_avx2,
    &gather_differences_avx2,
    &dot_avx2,
};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2Table; }
bool avx2_compiled() { return true; }

}  // namespace oimcut::simd

#else

namespace oimcut::simd {

const KernelTable& avx2_kernels() { return scalar_kernels(); }
bool avx2_compiled() { return false; }

}  // namespace oimcut::simd

#endif
