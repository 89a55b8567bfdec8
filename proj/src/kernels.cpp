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

#include "ravqe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ravqe {

char axis_char(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
  }
  return '?';
}

PauliMask two_site_mask(int n_qubits, Axis axis, int i, int j) {
  const std::uint64_t m = qubit_bit(n_qubits, i) | qubit_bit(n_qubits, j);
  switch (axis) {
    case Axis::X:
      return {m, 0, 0};
    case Axis::Y:
      return {m, m, 2};
    case Axis::Z:
      return {0, m, 0};
  }
  return {};
}

namespace {

using Matrix2 = std::array<std::array<cplx, 2>, 2>;

Matrix2 pauli_matrix(Axis a) {
  const cplx I{0, 1};
  switch (a) {
    case Axis::X:
      return {{{0, 1}, {1, 0}}};
    case Axis::Y:
      return {{{0, -I}, {I, 0}}};
    case Axis::Z:
      return {{{1, 0}, {0, -1}}};
  }
  return {};
}

// Insert a zero at bit position pos of k.
inline std::uint64_t insert_zero(std::uint64_t k, int pos) {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

template <typename BlockFn>
cplx blocked_sum(std::size_t dim, BlockFn&& fn) {
  using kernels::kReductionBlock;
  if (dim <= kReductionBlock) return fn(std::size_t{0}, dim);
  const std::size_t blocks = (dim + kReductionBlock - 1) / kReductionBlock;
  std::vector<cplx> partial(blocks);
#pragma omp parallel for schedule(static) if (dim >= kernels::kParallelThreshold)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(blocks); ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kReductionBlock;
    const std::size_t hi = std::min(dim, lo + kReductionBlock);
    partial[blk] = fn(lo, hi);
  }
  cplx total{0, 0};
  for (const auto& v : partial) total += v;
  return total;
}

void check_pair(int n_qubits, int i, int j) {
  if (i == j) throw std::invalid_argument("two-qubit kernel: sites must differ");
  if (i < 0 || j < 0 || i >= n_qubits || j >= n_qubits)
    throw std::out_of_range("two-qubit kernel: site out of range");
}

}  // namespace

Matrix4 rotation_matrix(Axis axis, double theta) {
  const Matrix2 s = pauli_matrix(axis);
  const double c = std::cos(theta);
  const cplx is{0, std::sin(theta)};
  Matrix4 u{};
  for (int r = 0; r < 4; ++r) {
    for (int col = 0; col < 4; ++col) {
      const cplx kron = s[r >> 1][col >> 1] * s[r & 1][col & 1];
      u[r][col] = is * kron + (r == col ? cplx{c, 0} : cplx{0, 0});
    }
  }
  return u;
}

namespace kernels {

void apply_pauli_rotation(std::span<cplx> amps, int n_qubits, Axis axis, int i, int j,
                          double theta) {
  check_pair(n_qubits, i, j);
  const std::size_t dim = amps.size();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const PauliMask p = two_site_mask(n_qubits, axis, i, j);
  cplx* a = amps.data();

  if (axis == Axis::Z) {
    const cplx plus{c, s};
    const cplx minus{c, -s};
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
      a[b] *= (std::popcount(static_cast<std::uint64_t>(b) & p.z) & 1) ? minus : plus;
    }
    return;
  }

  const int pos = n_qubits - 1 - i;
  const std::int64_t half = static_cast<std::int64_t>(dim / 2);
  const bool is_y = axis == Axis::Y;
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t b0 = insert_zero(static_cast<std::uint64_t>(k), pos);
    const std::uint64_t b1 = b0 ^ p.x;
    // YY|b> = -(-1)^(b_i + b_j) |b ^ x>; parity is shared by b0 and b1.
    double sign = 1.0;
    if (is_y) sign = (std::popcount(b0 & p.z) & 1) ? 1.0 : -1.0;
    const cplx f{0, s * sign};
    const cplx v0 = a[b0];
    const cplx v1 = a[b1];
    a[b0] = c * v0 + f * v1;
    a[b1] = c * v1 + f * v0;
  }
}

void accumulate_pauli(std::span<const cplx> in, std::span<cplx> out, const PauliMask& p,
                      cplx coeff) {
  const std::size_t dim = in.size();
  if (out.size() != dim) throw std::invalid_argument("accumulate_pauli: size mismatch");
  const cplx* src = in.data();
  cplx* dst = out.data();
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    dst[ub ^ p.x] += coeff * p.phase(ub) * src[ub];
  }
}

cplx pauli_overlap(std::span<const cplx> bra, std::span<const cplx> ket, const PauliMask& p) {
  if (bra.size() != ket.size()) throw std::invalid_argument("pauli_overlap: size mismatch");
  const cplx* l = bra.data();
  const cplx* r = ket.data();
  return blocked_sum(ket.size(), [&](std::size_t lo, std::size_t hi) {
    cplx acc{0, 0};
    for (std::size_t b = lo; b < hi; ++b) acc += std::conj(l[b ^ p.x]) * p.phase(b) * r[b];
    return acc;
  });
}

cplx inner(std::span<const cplx> bra, std::span<const cplx> ket) {
  if (bra.size() != ket.size()) throw std::invalid_argument("inner: size mismatch");
  const cplx* l = bra.data();
  const cplx* r = ket.data();
  return blocked_sum(ket.size(), [&](std::size_t lo, std::size_t hi) {
    cplx acc{0, 0};
    for (std::size_t b = lo; b < hi; ++b) acc += std::conj(l[b]) * r[b];
    return acc;
  });
}

void apply_two_qubit_unitary(std::span<cplx> amps, int n_qubits, int i, int j, const Matrix4& u) {
  check_pair(n_qubits, i, j);
  const std::size_t dim = amps.size();
  const std::uint64_t mi = qubit_bit(n_qubits, i);
  const std::uint64_t mj = qubit_bit(n_qubits, j);
  const int lo_pos = std::min(n_qubits - 1 - i, n_qubits - 1 - j);
  const int hi_pos = std::max(n_qubits - 1 - i, n_qubits - 1 - j);
  const std::int64_t quarter = static_cast<std::int64_t>(dim / 4);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t k = 0; k < quarter; ++k) {
    const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo_pos), hi_pos);
    const std::array<std::uint64_t, 4> idx{base, base | mj, base | mi, base | mi | mj};
    std::array<cplx, 4> v{a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
    for (int r = 0; r < 4; ++r) {
      a[idx[r]] = u[r][0] * v[0] + u[r][1] * v[1] + u[r][2] * v[2] + u[r][3] * v[3];
    }
  }
}

}  // namespace kernels

namespace reference {

void apply_two_qubit_unitary(std::span<cplx> amps, int n_qubits, int i, int j, const Matrix4& u) {
  check_pair(n_qubits, i, j);
  const std::uint64_t mi = qubit_bit(n_qubits, i);
  const std::uint64_t mj = qubit_bit(n_qubits, j);
  std::vector<cplx> out(amps.size(), cplx{0, 0});
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    const int row = ((b & mi) ? 2 : 0) | ((b & mj) ? 1 : 0);
    const std::uint64_t rest = b & ~(mi | mj);
    for (int col = 0; col < 4; ++col) {
      const std::uint64_t src = rest | ((col & 2) ? mi : 0) | ((col & 1) ? mj : 0);
      out[b] += u[row][col] * amps[src];
    }
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

void apply_pauli_rotation(std::span<cplx> amps, int n_qubits, Axis axis, int i, int j,
                          double theta) {
  apply_two_qubit_unitary(amps, n_qubits, i, j, rotation_matrix(axis, theta));
}

cplx pauli_overlap(std::span<const cplx> bra, std::span<const cplx> ket, const PauliMask& p) {
  cplx acc{0, 0};
  for (std::uint64_t b = 0; b < ket.size(); ++b) acc += std::conj(bra[b ^ p.x]) * p.phase(b) * ket[b];
  return acc;
}

}  // namespace reference

}  // namespace ravqe
