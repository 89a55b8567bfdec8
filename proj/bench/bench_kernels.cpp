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

// Parallel kernels against the serial reference: wall time and agreement.
// Usage: ravqe_bench [max_qubits] [repeats]

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "ravqe/kernels.hpp"

namespace {

using ravqe::cplx;

std::vector<cplx> random_state(int n, std::mt19937_64& rng) {
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

template <class F>
double seconds(int repeats, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 22;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
  std::mt19937_64 rng(1);
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-4s %-12s %12s %12s %8s %10s\n", "n", "kernel", "parallel_s", "reference_s", "speedup", "max_diff");
  for (int n = 10; n <= max_n; n += 4) {
    const auto psi = random_state(n, rng);
    for (auto axis : {ravqe::Axis::X, ravqe::Axis::Y, ravqe::Axis::Z}) {
      auto a = psi, b = psi;
      const double tp = seconds(repeats, [&] { ravqe::kernels::apply_pauli_rotation(a, n, axis, 0, n - 1, 0.3); });
      const double tr = seconds(repeats, [&] { ravqe::reference::apply_pauli_rotation(b, n, axis, 0, n - 1, 0.3); });
      std::printf("%-4d rot_%c%c       %12.3e %12.3e %8.2f %10.2e\n", n, ravqe::axis_char(axis),
                  ravqe::axis_char(axis), tp, tr, tr / tp, max_diff(a, b));
    }
    const auto mask = ravqe::two_site_mask(n, ravqe::Axis::Y, 1, 2);
    cplx op{}, orf{};
    const double tp = seconds(repeats, [&] { op = ravqe::kernels::pauli_overlap(psi, psi, mask); });
    const double tr = seconds(repeats, [&] { orf = ravqe::reference::pauli_overlap(psi, psi, mask); });
    std::printf("%-4d overlap_YY   %12.3e %12.3e %8.2f %10.2e\n", n, tp, tr, tr / tp, std::abs(op - orf));
  }
  return 0;
}
