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

#include "ravqe/density_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ravqe/statevector.hpp"

namespace ravqe {

namespace {

inline std::uint64_t insert_zero(std::uint64_t k, int pos) {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

void check_size(int n) {
  if (n < 1 || n > kMaxDensityQubits)
    throw std::invalid_argument("density matrix: n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDensityQubits) + "]");
}

void check_sites(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("density matrix: sites must differ");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("density matrix: site out of range");
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  dim_ = std::size_t{1} << n_qubits;
  data_.assign(dim_ * dim_, cplx{0, 0});
  data_[0] = 1.0;
}

cplx DensityMatrix::trace() const {
  cplx t{0, 0};
  for (std::size_t r = 0; r < dim_; ++r) t += (*this)(r, r);
  return t;
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
  return kernels::inner(data_, data_).real();
}

double DensityMatrix::hermiticity_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c) dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

double DensityMatrix::min_eigenvalue() const {
  const auto d = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = (*this)(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

DensityMatrix init_singlet_dm(int n) {
  check_size(n);
  const StateVector psi = init_singlet_chain(n);
  DensityMatrix rho(n);
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
  return rho;
}

void apply_gate_dm(DensityMatrix& rho, Axis axis, int i, int j, double theta) {
  const int n = rho.n_qubits();
  check_sites(n, i, j);
  // Rows: U. Columns: conj(U) = exp(-i theta G), since sigma (x) sigma is real for X, Y, Z.
  kernels::apply_pauli_rotation(rho.data(), 2 * n, axis, i, j, theta);
  kernels::apply_pauli_rotation(rho.data(), 2 * n, axis, n + i, n + j, -theta);
}

void depolarize_pair(DensityMatrix& rho, int i, int j, double p_noise) {
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw std::invalid_argument("depolarize_pair: p_noise outside [0, 1]");
  const int n = rho.n_qubits();
  check_sites(n, i, j);
  if (p_noise == 0.0) return;

  // rho' = (1 - q) rho + q Tr_ij(rho) (x) I/4 with q = 16 p / 15.
  const double q = 16.0 * p_noise / 15.0;
  const double keep = 1.0 - q;
  const int wide = 2 * n;
  const std::uint64_t ri = qubit_bit(wide, i), rj = qubit_bit(wide, j);
  const std::uint64_t ci = qubit_bit(wide, n + i), cj = qubit_bit(wide, n + j);
  std::array<int, 4> pos{wide - 1 - i, wide - 1 - j, wide - 1 - (n + i), wide - 1 - (n + j)};
  std::sort(pos.begin(), pos.end());
  const std::array<std::uint64_t, 4> row_bits{0, rj, ri, ri | rj};
  const std::array<std::uint64_t, 4> col_bits{0, cj, ci, ci | cj};

  cplx* d = rho.data().data();
  const std::int64_t groups = static_cast<std::int64_t>(rho.data().size() / 16);
#pragma omp parallel for schedule(static) if (rho.data().size() >= kernels::kParallelThreshold)
  for (std::int64_t g = 0; g < groups; ++g) {
    std::uint64_t base = static_cast<std::uint64_t>(g);
    for (int p : pos) base = insert_zero(base, p);
    cplx partial{0, 0};
    for (int a = 0; a < 4; ++a) partial += d[base | row_bits[a] | col_bits[a]];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) d[base | row_bits[a] | col_bits[b]] *= keep;
    for (int a = 0; a < 4; ++a) d[base | row_bits[a] | col_bits[a]] += 0.25 * q * partial;
  }
}

double expectation(const Observable& obs, const DensityMatrix& rho) {
  if (obs.n_qubits() != rho.n_qubits()) throw std::invalid_argument("expectation: register mismatch");
  const std::size_t dim = rho.dim();
  const auto d = rho.data();
  cplx total{0, 0};
  const auto masks = obs.masks();
  for (std::size_t t = 0; t < masks.size(); ++t) {
    // Tr(rho P) = sum_a rho[a][a ^ x] phase(a)
    cplx acc{0, 0};
    for (std::uint64_t a = 0; a < dim; ++a) acc += d[a * dim + (a ^ masks[t].x)] * masks[t].phase(a);
    total += obs.terms()[t].coefficient * acc;
  }
  if (std::abs(total.imag()) >= 1e-10)
    throw std::runtime_error("expectation: imaginary residue " + std::to_string(total.imag()));
  return total.real();
}

double noisy_energy(const CircuitLayout& layout, const ParameterVector& params,
                    const ActivationMask& mask, const Observable& obs, double p_noise) {
  check_circuit_args(layout, params, mask);
  if (obs.n_qubits() != layout.n_qubits()) throw std::invalid_argument("noisy_energy: register mismatch");
  DensityMatrix rho = init_singlet_dm(layout.n_qubits());
  for (const auto& slot : layout.slots()) {
    if (!mask[slot.flat_index]) continue;
    apply_gate_dm(rho, slot.axis, slot.site_i, slot.site_j, params[slot.flat_index]);
    depolarize_pair(rho, slot.site_i, slot.site_j, p_noise);
  }
  return expectation(obs, rho);
}

std::size_t channel_applications(const ActivationMask& mask) { return mask.count(); }

DensityMatrixBackend::DensityMatrixBackend(const CircuitLayout& layout, const Observable& obs,
                                           double p_noise)
    : layout_(layout), obs_(obs), p_noise_(p_noise) {
  check_size(layout.n_qubits());
  if (obs.n_qubits() != layout.n_qubits()) throw std::invalid_argument("DensityMatrixBackend: register mismatch");
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw std::invalid_argument("DensityMatrixBackend: p_noise outside [0, 1]");
}

double DensityMatrixBackend::energy(const ParameterVector& params, const ActivationMask& mask) const {
  return noisy_energy(layout_, params, mask, obs_, p_noise_);
}

std::vector<std::pair<double, double>> DensityMatrixBackend::shifted_energies(
    const ParameterVector& params, const ActivationMask& mask, double shift) const {
  check_circuit_args(layout_, params, mask);
  const int n = layout_.n_qubits();
  const std::size_t entries = std::size_t{1} << (2 * n);
  const std::size_t active = mask.count();
  if (active * entries * sizeof(cplx) > cache_limit_bytes) {
    return EnergyBackend::shifted_energies(params, mask, shift);
  }

  // Forward pass, keeping the state in front of every active gate.
  std::vector<std::vector<cplx>> before;
  before.reserve(active);
  DensityMatrix rho = init_singlet_dm(n);
  for (const auto& slot : layout_.slots()) {
    if (!mask[slot.flat_index]) continue;
    before.emplace_back(rho.data().begin(), rho.data().end());
    apply_gate_dm(rho, slot.axis, slot.site_i, slot.site_j, params[slot.flat_index]);
    depolarize_pair(rho, slot.site_i, slot.site_j, p_noise_);
  }

  // Backward pass with the Heisenberg-picture observable. The channel is a
  // Pauli channel and therefore its own adjoint.
  DensityMatrix lambda(n);
  {
    const auto h = dense_matrix(obs_);
    std::copy(h.begin(), h.end(), lambda.data().begin());
  }
  DensityMatrix sigma(n);
  std::vector<std::pair<double, double>> out(active);
  std::size_t idx = active;
  for (std::size_t k = layout_.size(); k-- > 0;) {
    if (!mask[k]) continue;
    --idx;
    const GateSlot& slot = layout_[k];
    depolarize_pair(lambda, slot.site_i, slot.site_j, p_noise_);
    for (int sgn : {+1, -1}) {
      std::copy(before[idx].begin(), before[idx].end(), sigma.data().begin());
      apply_gate_dm(sigma, slot.axis, slot.site_i, slot.site_j, params[k] + sgn * shift);
      // Tr(Lambda sigma) = <Lambda, sigma> for Hermitian Lambda.
      const double e = kernels::inner(lambda.data(), sigma.data()).real();
      (sgn > 0 ? out[idx].first : out[idx].second) = e;
    }
    apply_gate_dm(lambda, slot.axis, slot.site_i, slot.site_j, -params[k]);
  }
  return out;
}

namespace reference {

void depolarize_pair(DensityMatrix& rho, int i, int j, double p_noise) {
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw std::invalid_argument("depolarize_pair: p_noise outside [0, 1]");
  const int n = rho.n_qubits();
  const std::size_t dim = rho.dim();
  std::vector<cplx> acc(dim * dim, cplx{0, 0});
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) acc[r * dim + c] = (1.0 - p_noise) * rho(r, c);

  constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      std::vector<PauliFactor> factors;
      if (a) factors.push_back({i, kAxes[a - 1]});
      if (b) factors.push_back({j, kAxes[b - 1]});
      const auto pm = dense_matrix(Observable(n, {PauliTerm{1.0, factors}}));
      // acc += p/15 * P rho P, by naive products.
      std::vector<cplx> tmp(dim * dim, cplx{0, 0});
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t c = 0; c < dim; ++c) tmp[r * dim + c] += pm[r * dim + k] * rho(k, c);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
          cplx s{0, 0};
          for (std::size_t k = 0; k < dim; ++k) s += tmp[r * dim + k] * pm[k * dim + c];
          acc[r * dim + c] += (p_noise / 15.0) * s;
        }
    }
  }
  std::copy(acc.begin(), acc.end(), rho.data().begin());
}

}  // namespace reference

}  // namespace ravqe
