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
#include <utility>
#include <vector>

#include <json.hpp>

#include "ravqe/kernels.hpp"

namespace ravqe {

class StateVector;

struct PauliFactor {
  int site = 0;
  Axis axis = Axis::Z;
};

/// Real-weighted Pauli string. An empty factor list is the identity.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;

  PauliMask mask(int n_qubits) const;
};

/// Weighted sum of Pauli strings on a fixed register. Immutable once built;
/// the constructor enforces site range, distinct sites and finite weights.
class Observable {
 public:
  Observable(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::span<const PauliMask> masks() const { return masks_; }

  Observable operator+(const Observable& other) const;
  Observable scaled(double factor) const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
  std::vector<PauliMask> masks_;
};

/// Periodic XXZ chain: sum_i X_i X_{i+1} + Y_i Y_{i+1} + jz Z_i Z_{i+1}.
/// Terms are ordered bond by bond (XX, YY, ZZ), including the wrap bond (n-1, 0).
Observable build_xxz(int n, double jz);

/// <psi|O|psi>. Throws if the register sizes differ, the state is not
/// normalized to 1e-8, or the imaginary residue exceeds 1e-10.
double expectation(const Observable& obs, const StateVector& state);

/// out = O psi, term by term, without forming the matrix of O.
void apply_observable(const Observable& obs, std::span<const cplx> psi, std::span<cplx> out);

inline constexpr int kMaxDenseQubits = 14;

/// Dense 2^n x 2^n matrix, row-major. Used by exact diagonalization and tests.
std::vector<cplx> dense_matrix(const Observable& obs);

/// Smallest eigenvalue of the dense matrix of obs. Refuses n > kMaxDenseQubits.
double exact_ground_energy(const Observable& obs);

nlohmann::json to_json(const Observable& obs);
Observable observable_from_json(const nlohmann::json& j);

}  // namespace ravqe
