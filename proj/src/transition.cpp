// Copyright 2026 The ravqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ravqe/transition.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "ravqe/circuit.hpp"
#include "ravqe/kernels.hpp"
#include "ravqe/rng.hpp"
#include "ravqe/statevector.hpp"

namespace ravqe {

std::string to_string(TransitionInit k) { return k == TransitionInit::Zero ? "zero" : "singlet"; }

TransitionInit transition_init_from_string(const std::string& s) {
  if (s == "singlet") return TransitionInit::Singlet;
  if (s == "zero") return TransitionInit::Zero;
  throw std::invalid_argument("unknown initial state '" + s + "' (expected singlet or zero)");
}

void TransitionConfig::validate() const {
  if (L < 4 || L % 2 != 0 || L > 62) throw std::invalid_argument("transition: L must be even, 4 <= L <= 62");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("transition: p must lie in [0, 1]");
  if (blocks < 0) throw std::invalid_argument("transition: blocks must be >= 0");
  if (samples < 1) throw std::invalid_argument("transition: samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("transition: workers must be >= 1");
}

std::vector<CliffordGate> sample_clifford_circuit(int L, int blocks, double p, std::mt19937_64& rng) {
  const CircuitLayout layout(L, blocks);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<CliffordGate> gates;
  for (const GateSlot& s : layout.slots()) {
    if (unit(rng) < p) gates.push_back({s.site_i, s.site_j, sample_two_qubit_clifford(rng)});
  }
  return gates;
}

std::mt19937_64 transition_rng(std::uint64_t seed, int L, double p, int sample) {
  char label[64];
  std::snprintf(label, sizeof label, "transition/%d/%.17g", L, p);
  return make_rng(seed, static_cast<std::uint64_t>(sample), label);
}

namespace {

int tableau_sample(const TransitionConfig& c, int s) {
  auto rng = transition_rng(c.seed, c.L, c.p, s);
  const auto gates = sample_clifford_circuit(c.L, c.resolved_blocks(), c.p, rng);
  StabilizerTableau t = c.init == TransitionInit::Singlet ? init_singlet_tableau(c.L) : StabilizerTableau(c.L);
  for (const auto& g : gates) apply_clifford(t, g.element, g.i, g.j);
  return tableau_entropy(t, 0, c.L / 2);
}

}  // namespace

TransitionCurve run_transition(const TransitionConfig& config) {
  config.validate();
  TransitionCurve out;
  out.L = config.L;
  out.p = config.p;
  out.blocks = config.resolved_blocks();
  out.samples = config.samples;
  out.per_sample.assign(config.samples, 0);

  std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(config.workers)
  for (int s = 0; s < config.samples; ++s) {
    try {
      out.per_sample[s] = tableau_sample(config, s);
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error("run_transition: " + error);

  double sum = 0.0;
  for (int v : out.per_sample) sum += v;
  out.mean = sum / config.samples;
  if (config.samples > 1) {
    double ss = 0.0;
    for (int v : out.per_sample) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / (config.samples - 1) / config.samples);
  }
  return out;
}

std::vector<double> statevector_crosscheck(const TransitionConfig& config) {
  config.validate();
  if (config.L > 10) throw std::invalid_argument("statevector_crosscheck: L must be <= 10");
  std::vector<double> out(config.samples);
  for (int s = 0; s < config.samples; ++s) {
    auto rng = transition_rng(config.seed, config.L, config.p, s);
    const auto gates = sample_clifford_circuit(config.L, config.resolved_blocks(), config.p, rng);
    StateVector psi = config.init == TransitionInit::Singlet ? init_singlet_chain(config.L) : StateVector(config.L);
    for (const auto& g : gates) kernels::apply_two_qubit_unitary(psi.amplitudes(), config.L, g.i, g.j, g.element.unitary());
    out[s] = entanglement_entropy(psi, config.L / 2);
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be >= 1");
  std::vector<double> v(count, lo);
  for (int k = 1; k < count; ++k) v[k] = lo + (hi - lo) * k / (count - 1);
  return v;
}

namespace {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
};

// Linear interpolation; NaN outside [x.front(), x.back()].
double interpolate(const Series& s, double x) {
  if (x < s.x.front() || x > s.x.back()) return std::numeric_limits<double>::quiet_NaN();
  auto it = std::lower_bound(s.x.begin(), s.x.end(), x);
  std::size_t k = static_cast<std::size_t>(it - s.x.begin());
  if (k == 0) return s.y.front();
  if (s.x[k] == x) return s.y[k];
  const double w = (x - s.x[k - 1]) / (s.x[k] - s.x[k - 1]);
  return s.y[k - 1] + w * (s.y[k] - s.y[k - 1]);
}

}  // namespace

CollapseResult data_collapse(const std::vector<TransitionCurve>& curves, double p_c,
                             const std::vector<double>& nu_grid) {
  if (nu_grid.empty()) throw std::invalid_argument("data_collapse: empty nu grid");
  for (double nu : nu_grid)
    if (!(nu > 0.0)) throw std::invalid_argument("data_collapse: nu must be > 0");

  std::map<int, std::vector<std::pair<double, double>>> by_size;
  for (const auto& c : curves) by_size[c.L].emplace_back(c.p, c.mean);
  if (by_size.size() < 3) throw std::invalid_argument("data_collapse: need at least 3 distinct L");
  for (auto& [L, pts] : by_size) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first == b.first; }), pts.end());
    if (pts.size() < 2) throw std::invalid_argument("data_collapse: each L needs at least 2 distinct p");
  }

  CollapseResult out;
  out.nu_grid = nu_grid;
  out.costs.reserve(nu_grid.size());
  for (double nu : nu_grid) {
    std::vector<Series> series;
    for (const auto& [L, pts] : by_size) {
      Series s;
      const double scale = std::pow(static_cast<double>(L), 1.0 / nu);
      for (const auto& [p, y] : pts) {
        s.x.push_back((p - p_c) * scale);
        s.y.push_back(y);
      }
      series.push_back(std::move(s));
    }
    double sq = 0.0;
    std::size_t counted = 0;
    for (std::size_t a = 0; a < series.size(); ++a) {
      for (std::size_t k = 0; k < series[a].x.size(); ++k) {
        double acc = 0.0;
        int hits = 0;
        for (std::size_t b = 0; b < series.size(); ++b) {
          if (b == a) continue;
          const double v = interpolate(series[b], series[a].x[k]);
          if (!std::isnan(v)) {
            acc += v;
            ++hits;
          }
        }
        if (hits == 0) continue;
        const double d = series[a].y[k] - acc / hits;
        sq += d * d;
        ++counted;
      }
    }
    out.costs.push_back(counted ? sq / counted : std::numeric_limits<double>::infinity());
  }

  const auto best = std::min_element(out.costs.begin(), out.costs.end());
  out.nu = nu_grid[static_cast<std::size_t>(best - out.costs.begin())];
  out.cost = *best;

  // Flat cost or L-independent curves carry no exponent information.
  const double hi = *std::max_element(out.costs.begin(), out.costs.end());
  const bool flat = std::isfinite(hi) && hi - out.cost <= 1e-12 * (1.0 + std::abs(hi));
  bool identical = true;
  const auto& first = by_size.begin()->second;
  for (const auto& [L, pts] : by_size) identical = identical && pts == first;
  out.degenerate = flat || identical || !std::isfinite(out.cost);
  return out;
}

}  // namespace ravqe
