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
#include "ravqe/gradients.hpp"
#include "ravqe/pauli.hpp"

namespace ravqe {

inline constexpr int kMaxDensityQubits = 10;

/// Row-major 2^n x 2^n matrix. Entry (r, c) sits at r * 2^n + c, so the
/// storage doubles as a 2n-qubit vector whose first n qubits index rows.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);  // |0...0><0...0|

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }
  cplx operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  cplx trace() const;
  double purity() const;
  double hermiticity_deviation() const;
  double min_eigenvalue() const;

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<cplx> data_;
};

DensityMatrix init_singlet_dm(int n);

/// rho -> U rho U^dagger with U = exp(i theta sigma_i sigma_j).
void apply_gate_dm(DensityMatrix& rho, Axis axis, int i, int j, double theta);

/// Two-qubit depolarizing channel in the 15-Pauli form:
/// rho -> (1 - p) rho + p/15 sum_{P != II} P rho P.
/// Evaluated through the identity sum_{all 16 P} P rho P = 4 Tr_ij(rho) (x) I_ij.
void depolarize_pair(DensityMatrix& rho, int i, int j, double p_noise);

/// Tr(rho O), real part; the imaginary residue must be below 1e-10.
double expectation(const Observable& obs, const DensityMatrix& rho);

/// Active gates only, each followed by the channel on its pair.
double noisy_energy(const CircuitLayout& layout, const ParameterVector& params,
                    const ActivationMask& mask, const Observable& obs, double p_noise);

/// Channel applications one noisy_energy call performs (= active slot count).
std::size_t channel_applications(const ActivationMask& mask);

/// Depolarized HVA from the singlet chain. Shifted energies reuse the stored
/// forward states and a Heisenberg-picture observable walked backwards, which
/// gives the same pairs as re-running the circuit in O(p) channel applications.
class DensityMatrixBackend final : public EnergyBackend {
 public:
  DensityMatrixBackend(const CircuitLayout& layout, const Observable& obs, double p_noise);

  const CircuitLayout& layout() const override { return layout_; }
  double p_noise() const { return p_noise_; }
  double energy(const ParameterVector& params, const ActivationMask& mask) const override;
  std::vector<std::pair<double, double>> shifted_energies(const ParameterVector& params,
                                                          const ActivationMask& mask,
                                                          double shift) const override;

  /// Forward-state cache budget; above it shifted_energies falls back to re-running.
  std::size_t cache_limit_bytes = std::size_t{512} << 20;

 private:
  CircuitLayout layout_;
  Observable obs_;
  double p_noise_;
};

namespace reference {

/// Literal 15-term Kraus sum with dense Pauli matrices. Small n only.
void depolarize_pair(DensityMatrix& rho, int i, int j, double p_noise);

}  // namespace reference

}  // namespace ravqe
