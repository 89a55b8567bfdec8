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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ravqe/kernels.hpp"

namespace ravqe {

enum class Parity : std::uint8_t { Even, Odd };

/// One two-qubit rotation exp(i theta sigma_i sigma_j) of the HVA.
struct GateSlot {
  int layer = 0;
  Parity parity = Parity::Even;
  Axis axis = Axis::X;
  int site_i = 0;
  int site_j = 0;  // (site_i + 1) mod n
  std::size_t flat_index = 0;
};

/// Hamiltonian variational ansatz for the periodic chain. Within a layer the
/// slots run even-XX, even-YY, even-ZZ, odd-XX, odd-YY, odd-ZZ; layers are
/// concatenated. Flat index order equals application order.
class CircuitLayout {
 public:
  CircuitLayout(int n_qubits, int depth);

  int n_qubits() const { return n_qubits_; }
  int depth() const { return depth_; }
  std::size_t size() const { return slots_.size(); }
  std::size_t slots_per_layer() const { return 3 * static_cast<std::size_t>(n_qubits_); }

  const GateSlot& operator[](std::size_t k) const { return slots_[k]; }
  std::span<const GateSlot> slots() const { return slots_; }

 private:
  int n_qubits_;
  int depth_;
  std::vector<GateSlot> slots_;
};

CircuitLayout build_layout(int n, int depth);

/// Flat indices of layer k, in application order.
std::vector<std::size_t> slots_of_layer(const CircuitLayout& layout, int k);

/// Rotation angles, one per slot, in radians.
struct ParameterVector {
  std::vector<double> values;

  ParameterVector() = default;
  explicit ParameterVector(std::size_t p) : values(p, 0.0) {}
  explicit ParameterVector(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t k) { return values[k]; }
  double operator[](std::size_t k) const { return values[k]; }
  bool operator==(const ParameterVector&) const = default;
};

/// Active flags per slot. Over a training run the active set only grows.
struct ActivationMask {
  std::vector<std::uint8_t> flags;

  ActivationMask() = default;
  explicit ActivationMask(std::size_t p, bool active = false) : flags(p, active ? 1 : 0) {}

  std::size_t size() const { return flags.size(); }
  bool operator[](std::size_t k) const { return flags[k] != 0; }
  void set(std::size_t k, bool v = true) { flags[k] = v ? 1 : 0; }
  std::size_t count() const;
  bool all() const { return count() == flags.size(); }
  bool operator==(const ActivationMask&) const = default;
};

/// Throws std::invalid_argument unless params and mask both have layout.size() entries.
void check_circuit_args(const CircuitLayout& layout, const ParameterVector& params,
                        const ActivationMask& mask);

}  // namespace ravqe
