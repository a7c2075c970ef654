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

#include "oimcut/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oimcut/phase.hpp"

namespace oimcut {

IsingModel::IsingModel(std::size_t n, std::vector<Coupling> couplings)
    : n_(n), couplings_(std::move(couplings)) {
  for (Coupling& c : couplings_) {
    if (c.i > c.j) std::swap(c.i, c.j);
    if (c.i == c.j) throw std::invalid_argument("IsingModel: self-coupling J_ii");
    if (c.j >= n_) throw std::invalid_argument("IsingModel: coupling index out of range");
    if (!std::isfinite(c.value)) throw std::invalid_argument("IsingModel: non-finite coupling");
  }
  std::sort(couplings_.begin(), couplings_.end(), [](const Coupling& a, const Coupling& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < couplings_.size(); ++k) {
    if (couplings_[k].i == couplings_[k - 1].i && couplings_[k].j == couplings_[k - 1].j) {
      throw std::invalid_argument("IsingModel: duplicate coupling");
    }
  }
}

SpinConfig::SpinConfig(std::vector<int> spins) : spins_(std::move(spins)) {
  for (int s : spins_) {
    if (s != 1 && s != -1) throw std::invalid_argument("SpinConfig: spins must be +1 or -1");
  }
}

SpinConfig SpinConfig::flipped() const {
  std::vector<int> out(spins_);
  for (int& s : out) s = -s;
  return SpinConfig(std::move(out));
}

namespace {

void check_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(expected) + " vs " + std::to_string(got) + ")");
  }
}

}  // namespace

double hamiltonian(const IsingModel& m, const SpinConfig& s) {
  check_size(m.size(), s.size(), "hamiltonian");
  double h = 0.0;
  for (const Coupling& c : m.couplings()) h -= c.value * s[c.i] * s[c.j];
  return h;
}

IsingModel maxcut_to_ising(const Graph& g) {
  std::vector<Coupling> couplings;
  couplings.reserve(g.num_edges());
  for (const Edge& e : g.edges()) couplings.push_back({e.i, e.j, -e.w});
  return IsingModel(g.num_vertices(), std::move(couplings));
}

double cut_value(const Graph& g, const SpinConfig& s) {
  check_size(g.num_vertices(), s.size(), "cut_value");
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (s[e.i] != s[e.j]) cut += e.w;
  }
  return cut;
}

double maxcut_ising_objective(const Graph& g, const SpinConfig& s) {
  check_size(g.num_vertices(), s.size(), "maxcut_ising_objective");
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * s[e.i] * s[e.j];
  return total;
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute_force_maxcut: n = " + std::to_string(n) +
                                " exceeds the limit of " +
                                std::to_string(kBruteForceMaxVertices));
  }

  // Adjacency lists for incremental cut updates along a Gray code.
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.i].emplace_back(e.j, e.w);
    adj[e.j].emplace_back(e.i, e.w);
  }
  double scale = 0.0;
  for (const Edge& e : g.edges()) scale += std::fabs(e.w);
  const double tie_tol = 1e-9 * (1.0 + scale);

  // Spin 0 stays +1; bit k of the Gray code drives spin k + 1.
  std::vector<int> spins(n, 1);
  double cut = 0.0;
  double best = 0.0;
  std::uint64_t best_code = 0;
  std::size_t count = 1;
  const std::uint64_t total = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(step));
    const std::size_t v = bit + 1;
    double delta = 0.0;
    for (const auto& [u, w] : adj[v]) delta += spins[u] == spins[v] ? w : -w;
    spins[v] = -spins[v];
    cut += delta;
    if (cut > best + tie_tol) {
      best = cut;
      best_code = step ^ (step >> 1);
      count = 1;
    } else if (std::fabs(cut - best) <= tie_tol) {
      ++count;
    }
  }

  std::vector<int> best_spins(n, 1);
  for (std::size_t v = 1; v < n; ++v) {
    if ((best_code >> (v - 1)) & 1u) best_spins[v] = -1;
  }
  MaxCutSolution result;
  result.spins = SpinConfig(std::move(best_spins));
  result.value = cut_value(g, result.spins);
  result.num_maximizers = count;
  result.unique = count == 1;
  return result;
}

SpinConfig spins_from_phases(const PhaseConfig& theta) {
  std::vector<int> s(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) s[i] = std::cos(theta[i]) >= 0.0 ? 1 : -1;
  return SpinConfig(std::move(s));
}

PhaseConfig phases_from_spins(const SpinConfig& s) {
  std::vector<double> theta(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) theta[i] = s[i] == 1 ? 0.0 : kPi;
  return PhaseConfig(std::move(theta));
}

}  // namespace oimcut
