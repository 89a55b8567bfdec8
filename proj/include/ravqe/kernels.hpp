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
#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ravqe {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_char(Axis a);

/// Bit-level form of a Pauli string: P = i^ny * X^x * Z^z, with Z applied first.
///
/// Qubit q of an n-qubit register lives at bit (n - 1 - q) of the amplitude
/// index, i.e. qubit 0 is the most significant bit. Every backend uses this
/// convention.
struct PauliMask {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int ny = 0;

  /// Phase picked up by basis state |b> under P: P|b> = phase(b) |b ^ x>.
  cplx phase(std::uint64_t b) const {
    static constexpr std::array<cplx, 4> ipow{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
    const int sign = std::popcount(b & z) & 1;
    return ipow[(ny + 2 * sign) & 3];
  }
};

inline std::uint64_t qubit_bit(int n_qubits, int q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

/// Mask of the two-site Pauli product sigma_i sigma_j on the same axis.
PauliMask two_site_mask(int n_qubits, Axis axis, int i, int j);

using Matrix4 = std::array<std::array<cplx, 4>, 4>;

/// 4x4 matrix of exp(i theta sigma (x) sigma), basis |ab> with a the first qubit.
Matrix4 rotation_matrix(Axis axis, double theta);

namespace kernels {

/// Amplitude count above which kernels open an OpenMP region. Smaller states
/// run on the calling thread, so trial-level parallelism stays cheap.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Reductions sum fixed-size blocks and fold the block partials in order, so
/// the result does not depend on the thread count.
inline constexpr std::size_t kReductionBlock = 4096;

// In-place exp(i theta sigma_i sigma_j) by the stride-pair update.
void apply_pauli_rotation(std::span<cplx> amps, int n_qubits, Axis axis, int i, int j,
                          double theta);

// out += coeff * P in
void accumulate_pauli(std::span<const cplx> in, std::span<cplx> out, const PauliMask& p,
                      cplx coeff);

// <bra| P |ket>
cplx pauli_overlap(std::span<const cplx> bra, std::span<const cplx> ket, const PauliMask& p);

cplx inner(std::span<const cplx> bra, std::span<const cplx> ket);

// Generic two-qubit unitary on (i, j); u is indexed by (bit_i, bit_j).
void apply_two_qubit_unitary(std::span<cplx> amps, int n_qubits, int i, int j, const Matrix4& u);

}  // namespace kernels

/// Serial reference versions kept for testing and benchmarking. They
/// materialize small matrices and loop naively.
namespace reference {

void apply_pauli_rotation(std::span<cplx> amps, int n_qubits, Axis axis, int i, int j,
                          double theta);

void apply_two_qubit_unitary(std::span<cplx> amps, int n_qubits, int i, int j, const Matrix4& u);

cplx pauli_overlap(std::span<const cplx> bra, std::span<const cplx> ket, const PauliMask& p);

}  // namespace reference

}  // namespace ravqe
