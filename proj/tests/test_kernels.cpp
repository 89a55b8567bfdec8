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

#include <gtest/gtest.h>

#include <random>

#include "ravqe/kernels.hpp"
#include "test_util.hpp"

namespace ravqe {
namespace {

using testing::max_abs_diff;
using testing::random_amplitudes;

TEST(Kernels, RotationMatchesReferenceAllAxesAndPairs) {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 5}) {
    for (auto axis : {Axis::X, Axis::Y, Axis::Z}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          auto a = random_amplitudes(n, rng);
          auto b = a;
          kernels::apply_pauli_rotation(a, n, axis, i, j, 0.37);
          reference::apply_pauli_rotation(b, n, axis, i, j, 0.37);
          EXPECT_LT(max_abs_diff(a, b), 1e-13) << axis_char(axis) << ' ' << i << ' ' << j;
        }
      }
    }
  }
}

TEST(Kernels, ParallelPathMatchesReference) {
  // 15 qubits is above the OpenMP threshold.
  std::mt19937_64 rng(3);
  const int n = 15;
  auto a = random_amplitudes(n, rng);
  auto b = a;
  kernels::apply_pauli_rotation(a, n, Axis::Y, 14, 2, -1.1);
  reference::apply_pauli_rotation(b, n, Axis::Y, 14, 2, -1.1);
  EXPECT_LT(max_abs_diff(a, b), 1e-13);

  const auto mask = two_site_mask(n, Axis::Y, 3, 9);
  const cplx fast = kernels::pauli_overlap(a, b, mask);
  const cplx slow = reference::pauli_overlap(a, b, mask);
  EXPECT_NEAR(fast.real(), slow.real(), 1e-12);
  EXPECT_NEAR(fast.imag(), slow.imag(), 1e-12);
}

TEST(Kernels, OverlapIsDeterministic) {
  std::mt19937_64 rng(5);
  const int n = 16;
  const auto a = random_amplitudes(n, rng);
  const auto b = random_amplitudes(n, rng);
  const auto mask = two_site_mask(n, Axis::X, 0, 15);
  const cplx first = kernels::pauli_overlap(a, b, mask);
  for (int r = 0; r < 3; ++r) {
    const cplx again = kernels::pauli_overlap(a, b, mask);
    EXPECT_EQ(first.real(), again.real());
    EXPECT_EQ(first.imag(), again.imag());
  }
}

TEST(Kernels, TwoQubitUnitaryMatchesReference) {
  std::mt19937_64 rng(8);
  for (int n : {2, 4, 15}) {
    const Matrix4 u = rotation_matrix(Axis::X, 0.3);
    Matrix4 v{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) v[r][c] = u[r][c] * std::polar(1.0, 0.1 * (r + 2 * c));
    auto a = random_amplitudes(n, rng);
    auto b = a;
    kernels::apply_two_qubit_unitary(a, n, n - 1, 0, v);
    reference::apply_two_qubit_unitary(b, n, n - 1, 0, v);
    EXPECT_LT(max_abs_diff(a, b), 1e-13);
  }
}

TEST(Kernels, RotationMatrixIsTheRotationKernel) {
  std::mt19937_64 rng(2);
  for (auto axis : {Axis::X, Axis::Y, Axis::Z}) {
    auto a = random_amplitudes(3, rng);
    auto b = a;
    kernels::apply_pauli_rotation(a, 3, axis, 2, 1, 0.8);
    kernels::apply_two_qubit_unitary(b, 3, 2, 1, rotation_matrix(axis, 0.8));
    EXPECT_LT(max_abs_diff(a, b), 1e-13);
  }
}

TEST(Kernels, AccumulatePauliAgreesWithOverlap) {
  std::mt19937_64 rng(4);
  const int n = 4;
  const auto psi = random_amplitudes(n, rng);
  const auto phi = random_amplitudes(n, rng);
  const auto mask = two_site_mask(n, Axis::Y, 1, 3);
  std::vector<cplx> out(psi.size());
  kernels::accumulate_pauli(psi, out, mask, 1.0);
  const cplx via_acc = kernels::inner(phi, out);
  const cplx direct = kernels::pauli_overlap(phi, psi, mask);
  EXPECT_NEAR(std::abs(via_acc - direct), 0.0, 1e-13);
}

TEST(Kernels, RejectsBadSites) {
  std::vector<cplx> a(8);
  EXPECT_THROW(kernels::apply_pauli_rotation(a, 3, Axis::X, 1, 1, 0.1), std::invalid_argument);
  EXPECT_THROW(kernels::apply_pauli_rotation(a, 3, Axis::X, 0, 3, 0.1), std::out_of_range);
}

}  // namespace
}  // namespace ravqe
