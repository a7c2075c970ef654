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

#include "oimcut/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "oimcut/angles.hpp"
#include "oimcut/simd/kernels.hpp"

namespace oimcut {

PenaltyParams PenaltyParams::from_penalty(double mu, double k_coupling) {
  if (!(mu >= 0.0)) throw std::invalid_argument("penalty coefficient mu must be >= 0");
  if (!(k_coupling > 0.0)) throw std::invalid_argument("coupling gain K must be > 0");
  return {mu, k_coupling, k_coupling * mu / 2.0};
}

namespace {

std::int32_t checked_index(std::size_t i) {
  if (i > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument("vertex index exceeds int32 range");
  }
  return static_cast<std::int32_t>(i);
}

void check_mu(double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("penalty coefficient mu must be >= 0");
}

}  // namespace

PhaseEnergy::PhaseEnergy(const Graph& g, CouplingFunction f, double mu)
    : n_(g.num_vertices()), coupling_(std::move(f)), mu_(mu) {
  check_mu(mu);
  for (const Edge& e : g.edges()) {
    u_.push_back(checked_index(e.i));
    v_.push_back(checked_index(e.j));
    w_.push_back(e.w);
  }
  diff_.resize(w_.size());
  value_buf_.resize(w_.size());
  deriv_buf_.resize(w_.size());
  sin_buf_.resize(n_);
  cos_buf_.resize(n_);
}

PhaseEnergy::PhaseEnergy(const IsingModel& m, double mu)
    : n_(m.size()), coupling_(CouplingFunction::cosine()), mu_(mu) {
  check_mu(mu);
  for (const Coupling& c : m.couplings()) {
    u_.push_back(checked_index(c.i));
    v_.push_back(checked_index(c.j));
    w_.push_back(-c.value);
  }
  diff_.resize(w_.size());
  value_buf_.resize(w_.size());
  deriv_buf_.resize(w_.size());
  sin_buf_.resize(n_);
  cos_buf_.resize(n_);
}

void PhaseEnergy::check(std::span<const double> theta) const {
  if (theta.size() != n_) {
    throw std::invalid_argument("phase vector has " + std::to_string(theta.size()) +
                                " entries, expected " + std::to_string(n_));
  }
}

void PhaseEnergy::penalty_terms(std::span<const double> theta) const {
  simd::sincos(theta, sin_buf_, cos_buf_);
}

double PhaseEnergy::value(std::span<const double> theta) const {
  check(theta);
  simd::gather_differences(theta, u_, v_, diff_);
  coupling_.eval_batch(diff_, value_buf_, deriv_buf_);
  double energy = simd::dot(w_, value_buf_);
  if (mu_ != 0.0) {
    penalty_terms(theta);
    energy += 0.5 * mu_ * simd::dot(sin_buf_, sin_buf_);
  }
  return energy;
}

double PhaseEnergy::value_and_gradient(std::span<const double> theta,
                                       std::span<double> grad) const {
  check(theta);
  if (grad.size() != n_) throw std::invalid_argument("gradient buffer has wrong size");
  simd::gather_differences(theta, u_, v_, diff_);
  coupling_.eval_batch(diff_, value_buf_, deriv_buf_);
  double energy = simd::dot(w_, value_buf_);

  std::fill(grad.begin(), grad.end(), 0.0);
  for (std::size_t e = 0; e < w_.size(); ++e) {
    const double t = w_[e] * deriv_buf_[e];
    grad[u_[e]] += t;
    grad[v_[e]] -= t;
  }
  if (mu_ != 0.0) {
    penalty_terms(theta);
    energy += 0.5 * mu_ * simd::dot(sin_buf_, sin_buf_);
    // d/dtheta (mu/2) sin^2 = (mu/2) sin(2 theta) = mu sin cos.
    for (std::size_t i = 0; i < n_; ++i) grad[i] += mu_ * sin_buf_[i] * cos_buf_[i];
  }
  return energy;
}

void PhaseEnergy::gradient(std::span<const double> theta, std::span<double> grad) const {
  (void)value_and_gradient(theta, grad);
}

double energy_penalized(const PhaseConfig& theta, const IsingModel& m, double mu) {
  return PhaseEnergy(m, mu).value(theta.values());
}

std::vector<double> grad_penalized(const PhaseConfig& theta, const IsingModel& m, double mu) {
  std::vector<double> grad(m.size());
  PhaseEnergy(m, mu).gradient(theta.values(), grad);
  return grad;
}

std::vector<double> oim_rhs(const PhaseConfig& theta, const IsingModel& m,
                            const PenaltyParams& p) {
  if (theta.size() != m.size()) throw std::invalid_argument("oim_rhs: dimension mismatch");
  const auto& couplings = m.couplings();
  const std::size_t n = m.size();
  std::vector<std::int32_t> u, v;
  u.reserve(couplings.size());
  v.reserve(couplings.size());
  for (const Coupling& c : couplings) {
    u.push_back(checked_index(c.i));
    v.push_back(checked_index(c.j));
  }
  std::vector<double> diff(couplings.size()), s(couplings.size()), c(couplings.size());
  simd::gather_differences(theta.values(), u, v, diff);
  simd::sincos(diff, s, c);

  std::vector<double> rhs(n, 0.0);
  for (std::size_t e = 0; e < couplings.size(); ++e) {
    // sin(theta_j - theta_i) = -sin(theta_i - theta_j).
    const double term = p.k_coupling * couplings[e].value * s[e];
    rhs[u[e]] -= term;
    rhs[v[e]] += term;
  }
  if (p.k_lock != 0.0) {
    std::vector<double> doubled(n), s2(n), c2(n);
    for (std::size_t i = 0; i < n; ++i) doubled[i] = 2.0 * theta[i];
    simd::sincos(doubled, s2, c2);
    for (std::size_t i = 0; i < n; ++i) rhs[i] -= p.k_lock * s2[i];
  }
  return rhs;
}

double energy_general(const PhaseConfig& theta, const Graph& g, const CouplingFunction& f) {
  return PhaseEnergy(g, f, 0.0).value(theta.values());
}

std::vector<double> grad_general(const PhaseConfig& theta, const Graph& g,
                                 const CouplingFunction& f) {
  std::vector<double> grad(g.num_vertices());
  PhaseEnergy(g, f, 0.0).gradient(theta.values(), grad);
  return grad;
}

BinarizationReport detect_binarization(const PhaseConfig& theta, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("detect_binarization: eps must be > 0");
  BinarizationReport report;
  report.eps = eps;
  report.deviation.resize(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double d = std::min(circular_distance(theta[i], 0.0), circular_distance(theta[i], kPi));
    report.deviation[i] = d;
    report.max_deviation = std::max(report.max_deviation, d);
  }
  report.all_binarized = report.max_deviation <= eps;
  return report;
}

PhaseConfig align_to_binary_axis(const PhaseConfig& theta) {
  double re = 0.0;
  double im = 0.0;
  for (double t : theta.values()) {
    re += std::cos(2.0 * t);
    im += std::sin(2.0 * t);
  }
  const double offset = (re == 0.0 && im == 0.0) ? 0.0 : 0.5 * std::atan2(im, re);
  std::vector<double> out(theta.values().begin(), theta.values().end());
  for (double& t : out) t -= offset;
  return PhaseConfig(std::move(out));
}

}  // namespace oimcut
