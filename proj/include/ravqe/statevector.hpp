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

#include <span>
#include <vector>

#include "ravqe/circuit.hpp"
#include "ravqe/kernels.hpp"

namespace ravqe {

/// Dense pure state of n qubits, amplitudes in the qubit-0-is-MSB order.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  cplx operator[](std::size_t b) const { return amps_[b]; }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

/// Product of singlets (|01> - |10>)/sqrt2 on pairs (0,1), (2,3), ...
StateVector init_singlet_chain(int n);

/// exp(+i theta sigma_i sigma_j), in place.
void apply_two_pauli_rotation(StateVector& state, Axis axis, int i, int j, double theta);

/// Applies the active slots of the layout in flat order. Inactive slots are skipped.
void apply_circuit(const CircuitLayout& layout, const ParameterVector& params,
                   const ActivationMask& mask, StateVector& state);

/// Von Neumann entropy in bits of qubits [0, cut).
double entanglement_entropy(const StateVector& state, int cut);

}  // namespace ravqe
