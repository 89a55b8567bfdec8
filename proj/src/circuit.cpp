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

#include "ravqe/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ravqe {

CircuitLayout::CircuitLayout(int n_qubits, int depth) : n_qubits_(n_qubits), depth_(depth) {
  if (n_qubits < 4 || n_qubits % 2 != 0)
    throw std::invalid_argument("layout: n must be even and >= 4, got " + std::to_string(n_qubits));
  if (depth < 1) throw std::invalid_argument("layout: depth must be >= 1");
  if (n_qubits > 62) throw std::invalid_argument("layout: n too large");

  slots_.reserve(3 * static_cast<std::size_t>(n_qubits) * depth);
  constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};
  for (int layer = 0; layer < depth; ++layer) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const int offset = parity == Parity::Even ? 0 : 1;
      for (Axis axis : kAxes) {
        for (int b = 0; b < n_qubits / 2; ++b) {
          const int i = 2 * b + offset;
          slots_.push_back({layer, parity, axis, i, (i + 1) % n_qubits, slots_.size()});
        }
      }
    }
  }
}

CircuitLayout build_layout(int n, int depth) { return CircuitLayout(n, depth); }

std::vector<std::size_t> slots_of_layer(const CircuitLayout& layout, int k) {
  if (k < 0 || k >= layout.depth()) throw std::out_of_range("slots_of_layer: layer out of range");
  const std::size_t per = layout.slots_per_layer();
  std::vector<std::size_t> out(per);
  for (std::size_t s = 0; s < per; ++s) out[s] = static_cast<std::size_t>(k) * per + s;
  return out;
}

std::size_t ActivationMask::count() const {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

void check_circuit_args(const CircuitLayout& layout, const ParameterVector& params,
                        const ActivationMask& mask) {
  if (params.size() != layout.size() || mask.size() != layout.size()) {
    throw std::invalid_argument("circuit: expected " + std::to_string(layout.size()) +
                                " parameters and mask flags, got " + std::to_string(params.size()) +
                                " and " + std::to_string(mask.size()));
  }
}

}  // namespace ravqe
