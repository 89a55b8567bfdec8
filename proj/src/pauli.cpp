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

#include "ravqe/pauli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ravqe/statevector.hpp"

namespace ravqe {

PauliMask PauliTerm::mask(int n_qubits) const {
  PauliMask m;
  for (const auto& f : factors) {
    const std::uint64_t bit = qubit_bit(n_qubits, f.site);
    if (f.axis != Axis::Z) m.x |= bit;
    if (f.axis != Axis::X) m.z |= bit;
    if (f.axis == Axis::Y) ++m.ny;
  }
  m.ny &= 3;
  return m;
}

Observable::Observable(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits < 1 || n_qubits > 62) throw std::invalid_argument("observable: bad qubit count");
  masks_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient)) throw std::invalid_argument("observable: non-finite coefficient");
    std::uint64_t seen = 0;
    for (const auto& f : t.factors) {
      if (f.site < 0 || f.site >= n_qubits)
        throw std::out_of_range("observable: site " + std::to_string(f.site) + " out of range");
      const std::uint64_t bit = qubit_bit(n_qubits, f.site);
      if (seen & bit) throw std::invalid_argument("observable: repeated site in a term");
      seen |= bit;
    }
    masks_.push_back(t.mask(n_qubits));
  }
}

Observable Observable::operator+(const Observable& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("observable: size mismatch in sum");
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return Observable(n_qubits_, std::move(terms));
}

Observable Observable::scaled(double factor) const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient *= factor;
  return Observable(n_qubits_, std::move(terms));
}

Observable build_xxz(int n, double jz) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_xxz: n must be even and >= 4, got " + std::to_string(n));
  std::vector<PauliTerm> terms;
  terms.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    terms.push_back({1.0, {{i, Axis::X}, {j, Axis::X}}});
    terms.push_back({1.0, {{i, Axis::Y}, {j, Axis::Y}}});
    terms.push_back({jz, {{i, Axis::Z}, {j, Axis::Z}}});
  }
  return Observable(n, std::move(terms));
}

double expectation(const Observable& obs, const StateVector& state) {
  if (obs.n_qubits() != state.n_qubits())
    throw std::invalid_argument("expectation: observable acts on " + std::to_string(obs.n_qubits()) +
                                " qubits, state has " + std::to_string(state.n_qubits()));
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-8) throw std::invalid_argument("expectation: state not normalized");

  const auto psi = state.amplitudes();
  cplx total{0, 0};
  const auto masks = obs.masks();
  for (std::size_t t = 0; t < masks.size(); ++t) {
    total += obs.terms()[t].coefficient * kernels::pauli_overlap(psi, psi, masks[t]);
  }
  if (std::abs(total.imag()) >= 1e-10)
    throw std::runtime_error("expectation: imaginary residue " + std::to_string(total.imag()));
  return total.real();
}

void apply_observable(const Observable& obs, std::span<const cplx> psi, std::span<cplx> out) {
  if (psi.size() != (std::size_t{1} << obs.n_qubits()) || out.size() != psi.size())
    throw std::invalid_argument("apply_observable: dimension mismatch");
  std::fill(out.begin(), out.end(), cplx{0, 0});
  const auto masks = obs.masks();
  for (std::size_t t = 0; t < masks.size(); ++t) {
    kernels::accumulate_pauli(psi, out, masks[t], obs.terms()[t].coefficient);
  }
}

std::vector<cplx> dense_matrix(const Observable& obs) {
  if (obs.n_qubits() > kMaxDenseQubits)
    throw std::invalid_argument("dense_matrix: n = " + std::to_string(obs.n_qubits()) +
                                " exceeds the dense limit of " + std::to_string(kMaxDenseQubits));
  const std::size_t dim = std::size_t{1} << obs.n_qubits();
  std::vector<cplx> m(dim * dim, cplx{0, 0});
  const auto masks = obs.masks();
  for (std::size_t t = 0; t < masks.size(); ++t) {
    const double c = obs.terms()[t].coefficient;
    for (std::uint64_t b = 0; b < dim; ++b) m[(b ^ masks[t].x) * dim + b] += c * masks[t].phase(b);
  }
  return m;
}

double exact_ground_energy(const Observable& obs) {
  const int n = obs.n_qubits();
  if (n > kMaxDenseQubits)
    throw std::invalid_argument("exact_ground_energy: n = " + std::to_string(n) +
                                " exceeds the dense limit of " + std::to_string(kMaxDenseQubits));
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);

  bool real = true;
  for (const auto& m : obs.masks()) real = real && (m.ny % 2 == 0);

  if (real) {
    // An even number of Y factors keeps every matrix element real.
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const auto masks = obs.masks();
    for (std::size_t t = 0; t < masks.size(); ++t) {
      const double c = obs.terms()[t].coefficient;
      for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
        h(static_cast<Eigen::Index>(b ^ masks[t].x), static_cast<Eigen::Index>(b)) +=
            c * masks[t].phase(b).real();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("exact_ground_energy: eigensolver failed");
    return solver.eigenvalues()(0);
  }

  const auto dense = dense_matrix(obs);
  Eigen::MatrixXcd h(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) h(r, c) = dense[r * dim + c];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("exact_ground_energy: eigensolver failed");
  return solver.eigenvalues()(0);
}

nlohmann::json to_json(const Observable& obs) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : obs.terms()) {
    nlohmann::json paulis = nlohmann::json::array();
    for (const auto& f : t.factors) paulis.push_back({f.site, std::string(1, axis_char(f.axis))});
    terms.push_back({{"coeff", t.coefficient}, {"paulis", std::move(paulis)}});
  }
  return {{"n", obs.n_qubits()}, {"terms", std::move(terms)}};
}

Observable observable_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<PauliTerm> terms;
  for (const auto& jt : j.at("terms")) {
    PauliTerm t;
    t.coefficient = jt.at("coeff").get<double>();
    for (const auto& jp : jt.at("paulis")) {
      const auto label = jp.at(1).get<std::string>();
      Axis a;
      if (label == "X") {
        a = Axis::X;
      } else if (label == "Y") {
        a = Axis::Y;
      } else if (label == "Z") {
        a = Axis::Z;
      } else {
        throw std::invalid_argument("observable_from_json: unknown Pauli label '" + label + "'");
      }
      t.factors.push_back({jp.at(0).get<int>(), a});
    }
    terms.push_back(std::move(t));
  }
  return Observable(n, std::move(terms));
}

}  // namespace ravqe
