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

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ravqe/kernels.hpp"

namespace ravqe {

/// Stabilizer generator: (-1)^sign * prod_q P_q, where qubit q carries X if
/// bit q of x is set, Z if bit q of z is set, Y if both.
struct PauliRow {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool sign = false;

  bool operator==(const PauliRow&) const = default;
};

bool commutes(const PauliRow& a, const PauliRow& b);

inline constexpr int kMaxTableauQubits = 64;

/// n commuting, independent generators of a pure stabilizer state.
class StabilizerTableau {
 public:
  /// |0...0>: generators Z_q.
  explicit StabilizerTableau(int n_qubits);
  StabilizerTableau(int n_qubits, std::vector<PauliRow> rows);

  int n_qubits() const { return n_qubits_; }
  std::span<const PauliRow> rows() const { return rows_; }
  std::span<PauliRow> rows() { return rows_; }

  /// Rank of the generators over GF(2) (signs ignored) equals n and all pairs commute.
  bool is_valid() const;

  bool operator==(const StabilizerTableau&) const = default;

 private:
  int n_qubits_;
  std::vector<PauliRow> rows_;
};

/// Generators -X_{2k}X_{2k+1} and -Z_{2k}Z_{2k+1} per pair.
StabilizerTableau init_singlet_tableau(int n);

/// Two-qubit Pauli in 4 bits: bit0 x_a, bit1 z_a, bit2 x_b, bit3 z_b.
using Pauli2 = std::uint8_t;

/// Two-qubit Clifford, stored as the images of X_a, Z_a, X_b, Z_b (the
/// columns of a 4x4 binary symplectic matrix) plus one sign per image.
class TwoQubitClifford {
 public:
  TwoQubitClifford();  // identity
  TwoQubitClifford(std::array<Pauli2, 4> images, std::array<bool, 4> signs);

  const std::array<Pauli2, 4>& images() const { return images_; }
  const std::array<bool, 4>& signs() const { return signs_; }

  /// Conjugation C P C^dagger for each of the 16 unsigned two-qubit Paulis.
  Pauli2 image_bits(Pauli2 p) const { return table_bits_[p]; }
  bool image_sign(Pauli2 p) const { return table_sign_[p]; }

  /// M^T Omega M = Omega over GF(2).
  bool is_symplectic() const;
  TwoQubitClifford inverse() const;

  /// Explicit 4x4 unitary with U P U^dagger = C(P), basis |ab> at index 2a + b.
  Matrix4 unitary() const;

  bool operator==(const TwoQubitClifford& o) const { return images_ == o.images_ && signs_ == o.signs_; }

 private:
  void build_table();

  std::array<Pauli2, 4> images_;
  std::array<bool, 4> signs_;
  std::array<Pauli2, 16> table_bits_{};
  std::array<bool, 16> table_sign_{};
};

/// All 720 elements of Sp(4, 2) as image tuples, in lexicographic order.
const std::vector<std::array<Pauli2, 4>>& symplectic_group_4();

/// Uniform over the 11520 two-qubit Cliffords modulo phase: a uniform
/// symplectic matrix and four uniform sign bits.
TwoQubitClifford sample_two_qubit_clifford(std::mt19937_64& rng);

/// Index of the element's symplectic part in symplectic_group_4().
std::size_t symplectic_index(const TwoQubitClifford& c);

/// Conjugates every generator by the element acting on sites (a = i, b = j).
void apply_clifford(StabilizerTableau& tableau, const TwoQubitClifford& element, int i, int j);

/// Entanglement entropy in bits of the region given as a qubit bit mask:
/// rank of the generators restricted to the region minus its size.
int tableau_entropy(const StabilizerTableau& tableau, std::uint64_t region);

/// Contiguous region [begin, end).
int tableau_entropy(const StabilizerTableau& tableau, int begin, int end);

/// 4x4 matrix of a signed two-qubit Pauli.
Matrix4 pauli2_matrix(Pauli2 p, bool sign);

}  // namespace ravqe
