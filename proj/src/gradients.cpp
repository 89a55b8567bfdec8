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

#include "ravqe/gradients.hpp"

#include <stdexcept>

namespace ravqe {

namespace {

void check_register(const CircuitLayout& layout, const Observable& obs, const StateVector& init) {
  if (obs.n_qubits() != layout.n_qubits() || init.n_qubits() != layout.n_qubits())
    throw std::invalid_argument("gradient: layout, observable and state sizes differ");
}

}  // namespace

double circuit_energy(const CircuitLayout& layout, const ParameterVector& params,
                      const ActivationMask& mask, const Observable& obs, const StateVector& init) {
  check_register(layout, obs, init);
  StateVector psi = init;
  apply_circuit(layout, params, mask, psi);
  return expectation(obs, psi);
}

EnergyGradient reverse_sweep_gradient(const CircuitLayout& layout, const ParameterVector& params,
                                      const ActivationMask& mask, const Observable& obs,
                                      const StateVector& init) {
  check_register(layout, obs, init);
  StateVector phi = init;
  apply_circuit(layout, params, mask, phi);

  StateVector lambda(init.n_qubits());
  apply_observable(obs, phi.amplitudes(), lambda.amplitudes());

  EnergyGradient out;
  out.energy = kernels::inner(phi.amplitudes(), lambda.amplitudes()).real();
  out.grad.values.assign(layout.size(), 0.0);

  const int n = layout.n_qubits();
  for (std::size_t k = layout.size(); k-- > 0;) {
    if (!mask[k]) continue;
    const GateSlot& slot = layout[k];
    const PauliMask g = two_site_mask(n, slot.axis, slot.site_i, slot.site_j);
    // dE/dtheta = 2 Re <lambda| iG |phi> = -2 Im <lambda| G |phi>
    out.grad.values[k] = -2.0 * kernels::pauli_overlap(lambda.amplitudes(), phi.amplitudes(), g).imag();
    apply_two_pauli_rotation(phi, slot.axis, slot.site_i, slot.site_j, -params[k]);
    apply_two_pauli_rotation(lambda, slot.axis, slot.site_i, slot.site_j, -params[k]);
  }
  return out;
}

Gradient finite_difference_gradient(const CircuitLayout& layout, const ParameterVector& params,
                                    const ActivationMask& mask, const Observable& obs,
                                    const StateVector& init, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite_difference_gradient: step must be positive");
  check_circuit_args(layout, params, mask);
  Gradient g;
  g.values.assign(layout.size(), 0.0);
  ParameterVector shifted = params;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (!mask[k]) continue;
    shifted[k] = params[k] + step;
    const double up = circuit_energy(layout, shifted, mask, obs, init);
    shifted[k] = params[k] - step;
    const double down = circuit_energy(layout, shifted, mask, obs, init);
    shifted[k] = params[k];
    g.values[k] = (up - down) / (2.0 * step);
  }
  return g;
}

std::vector<std::pair<double, double>> EnergyBackend::shifted_energies(const ParameterVector& params,
                                                                       const ActivationMask& mask,
                                                                       double shift) const {
  std::vector<std::pair<double, double>> out;
  ParameterVector shifted = params;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (!mask[k]) continue;
    shifted[k] = params[k] + shift;
    const double up = energy(shifted, mask);
    shifted[k] = params[k] - shift;
    const double down = energy(shifted, mask);
    shifted[k] = params[k];
    out.emplace_back(up, down);
  }
  return out;
}

StatevectorBackend::StatevectorBackend(const CircuitLayout& layout, const Observable& obs,
                                       StateVector init)
    : layout_(layout), obs_(obs), init_(std::move(init)) {
  check_register(layout_, obs_, init_);
}

double StatevectorBackend::energy(const ParameterVector& params, const ActivationMask& mask) const {
  return circuit_energy(layout_, params, mask, obs_, init_);
}

Gradient parameter_shift_gradient(const EnergyBackend& backend, const ParameterVector& params,
                                  const ActivationMask& mask, EvaluationCounter* counter) {
  check_circuit_args(backend.layout(), params, mask);
  const auto pairs = backend.shifted_energies(params, mask, kParameterShift);
  Gradient g;
  g.values.assign(params.size(), 0.0);
  std::size_t next = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (!mask[k]) continue;
    g.values[k] = pairs[next].first - pairs[next].second;
    ++next;
  }
  if (counter) counter->evaluations += 2 * next;
  return g;
}

}  // namespace ravqe
