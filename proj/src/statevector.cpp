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

#include "ravqe/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ravqe {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("StateVector: bad qubit count");
  amps_.assign(std::size_t{1} << n_qubits, cplx{0, 0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("StateVector: bad qubit count");
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("StateVector: expected 2^" + std::to_string(n_qubits) + " amplitudes");
}

double StateVector::norm() const { return std::sqrt(kernels::inner(amps_, amps_).real()); }

StateVector init_singlet_chain(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("init_singlet_chain: n must be even");
  // Pair k contributes +1/sqrt2 for |01> and -1/sqrt2 for |10>.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> amps(dim, cplx{0, 0});
  const double scale = std::pow(2.0, -0.5 * (n / 2));
  for (std::uint64_t b = 0; b < dim; ++b) {
    double v = scale;
    for (int k = 0; k < n / 2; ++k) {
      const bool first = b & qubit_bit(n, 2 * k);
      const bool second = b & qubit_bit(n, 2 * k + 1);
      if (first == second) {
        v = 0.0;
        break;
      }
      if (first) v = -v;
    }
    amps[b] = v;
  }
  return StateVector(n, std::move(amps));
}

void apply_two_pauli_rotation(StateVector& state, Axis axis, int i, int j, double theta) {
  kernels::apply_pauli_rotation(state.amplitudes(), state.n_qubits(), axis, i, j, theta);
}

void apply_circuit(const CircuitLayout& layout, const ParameterVector& params,
                   const ActivationMask& mask, StateVector& state) {
  check_circuit_args(layout, params, mask);
  if (state.n_qubits() != layout.n_qubits()) throw std::invalid_argument("apply_circuit: register mismatch");
  for (const auto& slot : layout.slots()) {
    if (!mask[slot.flat_index]) continue;
    apply_two_pauli_rotation(state, slot.axis, slot.site_i, slot.site_j, params[slot.flat_index]);
  }
}

double entanglement_entropy(const StateVector& state, int cut) {
  const int n = state.n_qubits();
  if (cut <= 0 || cut >= n) throw std::out_of_range("entanglement_entropy: cut must be in (0, n)");
  const auto rows = static_cast<Eigen::Index>(std::size_t{1} << cut);
  const auto cols = static_cast<Eigen::Index>(std::size_t{1} << (n - cut));
  // Qubits [0, cut) are the high bits, so the amplitude array is row-major M(a, c).
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.amplitudes().data(), rows, cols);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > 1e-12) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace ravqe
