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
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oimcut {

/// Even, 2*pi-periodic coupling g between oscillator phase differences.
///
/// A coupling is one of a few closed forms (cosine, folded quadratic, cosine
/// series) that have batched SIMD kernels, or an arbitrary user function.
/// Smoothed couplings remember the function they approximate; exact() returns
/// it, and certificates and reported energies use that exact form.
class CouplingFunction {
 public:
  using ScalarFn = std::function<double(double)>;

  static CouplingFunction cosine();
  static CouplingFunction quadratic_g2();
  /// Series a[0] + sum_m a[m] cos(m x).
  static CouplingFunction cosine_series(std::string name, std::vector<double> coeffs,
                                        std::shared_ptr<const CouplingFunction> source = nullptr);
  static CouplingFunction custom(std::string name, ScalarFn eval, ScalarFn deriv,
                                 bool smooth_everywhere);

  double eval(double x) const;
  double deriv(double x) const;
  /// value[k] = g(x[k]), deriv[k] = g'(x[k]) through the active SIMD kernels.
  void eval_batch(std::span<const double> x, std::span<double> value,
                  std::span<double> deriv) const;

  const std::string& name() const { return name_; }
  bool is_smooth_everywhere() const { return smooth_; }
  /// Cosine-series coefficients, empty for non-series couplings.
  std::span<const double> coefficients() const;
  /// The unsmoothed function this coupling approximates (itself if none).
  const CouplingFunction& exact() const { return source_ ? *source_ : *this; }
  bool is_smoothed() const { return source_ != nullptr; }

 private:
  struct Cosine {};
  struct FoldedQuadratic {};
  struct Series {
    std::vector<double> coeffs;
  };
  struct Custom {
    ScalarFn eval;
    ScalarFn deriv;
  };
  using Kind = std::variant<Cosine, FoldedQuadratic, Series, Custom>;

  CouplingFunction(std::string name, Kind kind, bool smooth,
                   std::shared_ptr<const CouplingFunction> source);

  std::string name_;
  Kind kind_;
  bool smooth_;
  std::shared_ptr<const CouplingFunction> source_;
};

inline CouplingFunction cosine() { return CouplingFunction::cosine(); }
inline CouplingFunction quadratic_g2() { return CouplingFunction::quadratic_g2(); }

/// Cosine coefficients a_0..a_k of an even coupling by adaptive quadrature:
/// a_0 = (1/pi) int_0^pi f, a_m = (2/pi) int_0^pi f(x) cos(mx) dx.
std::vector<double> fourier_cosine_coefficients(const CouplingFunction& f, std::size_t k);

/// k-term cosine expansion of f, named "<f>-fourier:<k>". Throws
/// std::invalid_argument when k < 1.
CouplingFunction fourier_truncate(const CouplingFunction& f, std::size_t k);

/// Resolves "cos", "g2" or "g2-fourier:K". Throws std::invalid_argument.
CouplingFunction parse_coupling(std::string_view name);

struct ClassGReport {
  bool even = false;
  bool periodic = false;
  bool boundary_values = false;
  bool in_range = false;
  bool differentiable = false;
  double max_even_error = 0.0;
  double max_period_error = 0.0;
  double value_at_zero = 0.0;
  double value_at_pi = 0.0;
  double max_range_excess = 0.0;
  /// Location of the largest detected derivative jump (or NaN if none).
  double corner_at = 0.0;
  double tolerance = 0.0;

  bool passes() const { return even && periodic && boundary_values && in_range && differentiable; }
};

inline constexpr std::size_t kClassGGridPoints = 10'000;

/// Checks the coupling-class properties on a 10^4-point grid over [0, 2*pi):
/// evenness, 2*pi-periodicity, g(0) = 1 and g(pi) = -1 and range [-1, 1]
/// within `tolerance`, and absence of derivative jumps (one-sided
/// differences that do not shrink with the step).
ClassGReport validate_class_g(const CouplingFunction& f, double tolerance = 1e-6);

/// Raised when 1 - g(x) <= 0 at some x > 0 inside a ratio scan.
class RatioDomainError : public std::domain_error {
 public:
  RatioDomainError(double x, const std::string& what) : std::domain_error(what), x_(x) {}
  double x() const { return x_; }

 private:
  double x_;
};

/// min over x in [lo, hi] of (2/pi) x / (1 - g(x)). x = 0 enters through
/// the limit: included when finite, ignored when it diverges. Returns
/// +infinity for the degenerate interval [0, 0] with a divergent limit.
/// Requires 0 <= lo <= hi <= pi.
double ratio_over_interval(const CouplingFunction& f, double lo, double hi);

/// ratio_over_interval(f, 0, pi).
double approximation_ratio(const CouplingFunction& f);

}  // namespace oimcut
