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

#include "oimcut/coupling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "oimcut/angles.hpp"
#include "oimcut/simd/kernels.hpp"

namespace oimcut {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double folded_quadratic_value(double x) {
  const double r = circular_distance(x, 0.0) / kPi;
  return 1.0 - 2.0 * r * r;
}

double folded_quadratic_slope(double x) {
  const double y = wrap_to_pi(x);
  if (std::fabs(y) >= kPi) return 0.0;
  return -4.0 * (y / kPi) / kPi;
}

}  // namespace

CouplingFunction::CouplingFunction(std::string name, Kind kind, bool smooth,
                                   std::shared_ptr<const CouplingFunction> source)
    : name_(std::move(name)), kind_(std::move(kind)), smooth_(smooth), source_(std::move(source)) {}

CouplingFunction CouplingFunction::cosine() { return {"cos", Cosine{}, true, nullptr}; }

CouplingFunction CouplingFunction::quadratic_g2() {
  return {"g2", FoldedQuadratic{}, false, nullptr};
}

CouplingFunction CouplingFunction::cosine_series(std::string name, std::vector<double> coeffs,
                                                 std::shared_ptr<const CouplingFunction> source) {
  if (coeffs.empty()) throw std::invalid_argument("cosine_series: no coefficients");
  return {std::move(name), Series{std::move(coeffs)}, true, std::move(source)};
}

CouplingFunction CouplingFunction::custom(std::string name, ScalarFn eval, ScalarFn deriv,
                                          bool smooth_everywhere) {
  if (!eval || !deriv) throw std::invalid_argument("custom coupling needs eval and deriv");
  return {std::move(name), Custom{std::move(eval), std::move(deriv)}, smooth_everywhere, nullptr};
}

double CouplingFunction::eval(double x) const {
  return std::visit(Overloaded{
                        [&](const Cosine&) { return std::cos(x); },
                        [&](const FoldedQuadratic&) { return folded_quadratic_value(x); },
                        [&](const Series& s) {
                          double v = s.coeffs[0];
                          for (std::size_t m = 1; m < s.coeffs.size(); ++m) {
                            v += s.coeffs[m] * std::cos(static_cast<double>(m) * x);
                          }
                          return v;
                        },
                        [&](const Custom& c) { return c.eval(x); },
                    },
                    kind_);
}

double CouplingFunction::deriv(double x) const {
  return std::visit(Overloaded{
                        [&](const Cosine&) { return -std::sin(x); },
                        [&](const FoldedQuadratic&) { return folded_quadratic_slope(x); },
                        [&](const Series& s) {
                          double d = 0.0;
                          for (std::size_t m = 1; m < s.coeffs.size(); ++m) {
                            const double fm = static_cast<double>(m);
                            d -= fm * s.coeffs[m] * std::sin(fm * x);
                          }
                          return d;
                        },
                        [&](const Custom& c) { return c.deriv(x); },
                    },
                    kind_);
}

void CouplingFunction::eval_batch(std::span<const double> x, std::span<double> value,
                                  std::span<double> deriv) const {
  if (value.size() != x.size() || deriv.size() != x.size()) {
    throw std::invalid_argument("eval_batch: size mismatch");
  }
  std::visit(Overloaded{
                 [&](const Cosine&) {
                   // sincos writes sin into deriv; negate in place.
                   simd::sincos(x, deriv, value);
                   for (double& d : deriv) d = -d;
                 },
                 [&](const FoldedQuadratic&) { simd::folded_quadratic(x, value, deriv); },
                 [&](const Series& s) { simd::cosine_series(s.coeffs, x, value, deriv); },
                 [&](const Custom& c) {
                   for (std::size_t k = 0; k < x.size(); ++k) {
                     value[k] = c.eval(x[k]);
                     deriv[k] = c.deriv(x[k]);
                   }
                 },
             },
             kind_);
}

std::span<const double> CouplingFunction::coefficients() const {
  if (const auto* s = std::get_if<Series>(&kind_)) return s->coeffs;
  return {};
}

std::vector<double> fourier_cosine_coefficients(const CouplingFunction& f, std::size_t k) {
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
  // Each piece is smooth, where one 61-point rule is already at machine
  // precision; pieces with near-zero integrals never meet a relative
  // tolerance, so the depth stays small.
  constexpr unsigned kMaxDepth = 6;
  constexpr double kTol = 1e-13;
  std::vector<double> a(k + 1);
  a[0] = Quadrature::integrate([&](double x) { return f.eval(x); }, 0.0, kPi, kMaxDepth, kTol) /
         kPi;
  for (std::size_t m = 1; m <= k; ++m) {
    const double fm = static_cast<double>(m);
    // Subintervals at the zeros of cos(mx) keep each piece non-oscillatory.
    double integral = 0.0;
    const std::size_t pieces = 2 * m;
    for (std::size_t p = 0; p < pieces; ++p) {
      const double lo = kPi * static_cast<double>(p) / static_cast<double>(pieces);
      const double hi = kPi * static_cast<double>(p + 1) / static_cast<double>(pieces);
      integral += Quadrature::integrate([&](double x) { return f.eval(x) * std::cos(fm * x); },
                                        lo, hi, kMaxDepth, kTol);
    }
    a[m] = 2.0 * integral / kPi;
  }
  return a;
}

CouplingFunction fourier_truncate(const CouplingFunction& f, std::size_t k) {
  if (k < 1) throw std::invalid_argument("fourier_truncate: term count must be >= 1");
  const CouplingFunction& base = f.exact();
  auto source = std::make_shared<const CouplingFunction>(base);
  return CouplingFunction::cosine_series(base.name() + "-fourier:" + std::to_string(k),
                                         fourier_cosine_coefficients(f, k), std::move(source));
}

CouplingFunction parse_coupling(std::string_view name) {
  constexpr std::string_view kFourier = "-fourier:";
  const auto pos = name.find(kFourier);
  const std::string_view base_name = pos == std::string_view::npos ? name : name.substr(0, pos);
  CouplingFunction base = [&] {
    if (base_name == "cos") return cosine();
    if (base_name == "g2") return quadratic_g2();
    throw std::invalid_argument("unknown coupling '" + std::string(name) +
                                "' (expected cos, g2 or g2-fourier:K)");
  }();
  if (pos == std::string_view::npos) return base;
  const std::string_view digits = name.substr(pos + kFourier.size());
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) {
    throw std::invalid_argument("invalid Fourier term count in '" + std::string(name) + "'");
  }
  return fourier_truncate(base, k);
}

ClassGReport validate_class_g(const CouplingFunction& f, double tolerance) {
  ClassGReport report;
  report.tolerance = tolerance;
  report.value_at_zero = f.eval(0.0);
  report.value_at_pi = f.eval(kPi);

  // A corner shows up as a one-sided difference jump that stays put when the
  // step shrinks; for smooth g it scales like h * |g''|.
  constexpr double kCoarse = 1e-3;
  constexpr double kFine = 1e-4;
  constexpr double kJumpFloor = 1e-4;
  auto jump = [&](double x, double h) {
    const double fx = f.eval(x);
    return std::fabs((f.eval(x + h) - fx) - (fx - f.eval(x - h))) / h;
  };

  double worst_jump = 0.0;
  double corner = std::numeric_limits<double>::quiet_NaN();
  const std::size_t n = kClassGGridPoints;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const double fx = f.eval(x);
    report.max_even_error = std::max(report.max_even_error, std::fabs(fx - f.eval(-x)));
    report.max_period_error = std::max(report.max_period_error, std::fabs(fx - f.eval(x + kTwoPi)));
    report.max_range_excess = std::max({report.max_range_excess, fx - 1.0, -1.0 - fx});
    const double fine = jump(x, kFine);
    if (fine > kJumpFloor && fine > 0.5 * jump(x, kCoarse) && fine > worst_jump) {
      worst_jump = fine;
      corner = x;
    }
  }
  report.corner_at = corner;
  report.even = report.max_even_error <= tolerance;
  report.periodic = report.max_period_error <= tolerance;
  report.boundary_values = std::fabs(report.value_at_zero - 1.0) <= tolerance &&
                           std::fabs(report.value_at_pi + 1.0) <= tolerance;
  report.in_range = report.max_range_excess <= tolerance;
  report.differentiable = std::isnan(corner);
  return report;
}

namespace {

double checked_ratio(const CouplingFunction& f, double x) {
  const double den = 1.0 - f.eval(x);
  // Near x = 0 a coupling with g(0) = 1 can round 1 - g to zero; the ratio
  // is unbounded there rather than undefined.
  if (std::fabs(den) <= 1e-13) return std::numeric_limits<double>::infinity();
  if (!(den > 0.0)) {
    throw RatioDomainError(x, "approximation ratio undefined: 1 - g(x) = " + std::to_string(den) +
                                  " at x = " + std::to_string(x));
  }
  return 2.0 * x / (kPi * den);
}

// Value of the ratio as x -> 0+.
double ratio_limit_at_zero(const CouplingFunction& f) {
  const double den0 = 1.0 - f.eval(0.0);
  if (den0 > 1e-12) return 0.0;
  if (den0 < -1e-12) throw RatioDomainError(0.0, "approximation ratio undefined: g(0) > 1");
  const double r_coarse = checked_ratio(f, 1e-4);
  const double r_fine = checked_ratio(f, 1e-6);
  // 1 - g ~ c x^2 makes the ratio grow like 1/x; 1 - g ~ c x keeps it flat.
  if (r_fine > 10.0 * r_coarse) return std::numeric_limits<double>::infinity();
  return r_fine;
}

}  // namespace

double ratio_over_interval(const CouplingFunction& f, double lo, double hi) {
  constexpr double kSlack = 1e-12;
  if (!(lo >= 0.0 && lo <= hi && hi <= kPi + kSlack)) {
    throw std::invalid_argument("ratio_over_interval: need 0 <= lo <= hi <= pi");
  }
  hi = std::min(hi, kPi);
  lo = std::min(lo, hi);

  double best = std::numeric_limits<double>::infinity();
  if (lo == 0.0) best = ratio_limit_at_zero(f);
  if (lo == hi) return lo > 0.0 ? checked_ratio(f, lo) : best;

  constexpr std::size_t kGrid = 10'000;
  const double step = (hi - lo) / static_cast<double>(kGrid);
  double grid_best = std::numeric_limits<double>::infinity();
  double grid_x = hi;
  for (std::size_t k = 0; k <= kGrid; ++k) {
    const double x = k == kGrid ? hi : lo + step * static_cast<double>(k);
    if (x <= 0.0) continue;
    const double r = checked_ratio(f, x);
    if (r < grid_best) {
      grid_best = r;
      grid_x = x;
    }
  }
  best = std::min(best, grid_best);

  // Brent refinement on the bracketing grid cells. Tolerance ~2^-34 relative
  // in x, i.e. about 1e-10 for x = O(1).
  double a = std::max(lo, grid_x - step);
  const double b = std::min(hi, grid_x + step);
  if (a <= 0.0) a = std::min(b, 1e-3 * step);
  if (b > a) {
    std::uintmax_t max_iter = 200;
    const auto [x_min, r_min] = boost::math::tools::brent_find_minima(
        [&](double x) { return checked_ratio(f, x); }, a, b, 34, max_iter);
    (void)x_min;
    best = std::min(best, r_min);
  }
  return best;
}

double approximation_ratio(const CouplingFunction& f) { return ratio_over_interval(f, 0.0, kPi); }

}  // namespace oimcut
