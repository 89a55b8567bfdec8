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

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ravqe/circuit.hpp"
#include "ravqe/kernels.hpp"
#include "ravqe/statevector.hpp"

namespace ravqe::testing {

inline std::vector<cplx> random_amplitudes(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

inline StateVector random_state(int n, std::mt19937_64& rng) { return StateVector(n, random_amplitudes(n, rng)); }

inline ParameterVector random_params(std::size_t p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  ParameterVector v(p);
  for (std::size_t k = 0; k < p; ++k) v[k] = u(rng);
  return v;
}

inline ActivationMask random_mask(std::size_t p, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution b(density);
  ActivationMask m(p);
  for (std::size_t k = 0; k < p; ++k) m.set(k, b(rng));
  return m;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace ravqe::testing
