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

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "ravqe/circuit.hpp"
#include "ravqe/pauli.hpp"
#include "ravqe/statevector.hpp"

namespace ravqe {

/// dE/dtheta per slot. Inactive slots hold 0 and are never computed.
struct Gradient {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

struct EnergyGradient {
  double energy = 0.0;
  Gradient grad;
};

/// Hardware-cost proxy: expectation values a parameter-shift device would measure.
struct EvaluationCounter {
  std::uint64_t evaluations = 0;
};

/// Shift for exp(i theta G) with G^2 = I: dE/dtheta = E(theta + pi/4) - E(theta - pi/4).
inline constexpr double kParameterShift = std::numbers::pi / 4;

double circuit_energy(const CircuitLayout& layout, const ParameterVector& params,
                      const ActivationMask& mask, const Observable& obs, const StateVector& init);

/// Adjoint sweep: one forward pass, then one state and one costate walked back
/// through inverse gates. O(p 2^n) time, O(2^n) memory.
EnergyGradient reverse_sweep_gradient(const CircuitLayout& layout, const ParameterVector& params,
                                      const ActivationMask& mask, const Observable& obs,
                                      const StateVector& init);

/// Central differences per active slot; test oracle.
Gradient finite_difference_gradient(const CircuitLayout& layout, const ParameterVector& params,
                                    const ActivationMask& mask, const Observable& obs,
                                    const StateVector& init, double step);

/// Something that can evaluate E(theta) for a fixed layout, observable and initial state.
class EnergyBackend {
 public:
  virtual ~EnergyBackend() = default;

  virtual const CircuitLayout& layout() const = 0;
  virtual double energy(const ParameterVector& params, const ActivationMask& mask) const = 0;

  /// (E(theta_k + shift), E(theta_k - shift)) for each active slot k, in slot
  /// order. The default re-runs the full circuit twice per slot.
  virtual std::vector<std::pair<double, double>> shifted_energies(const ParameterVector& params,
                                                                  const ActivationMask& mask,
                                                                  double shift) const;
};

class StatevectorBackend final : public EnergyBackend {
 public:
  StatevectorBackend(const CircuitLayout& layout, const Observable& obs, StateVector init);

  const CircuitLayout& layout() const override { return layout_; }
  double energy(const ParameterVector& params, const ActivationMask& mask) const override;

 private:
  CircuitLayout layout_;
  Observable obs_;
  StateVector init_;
};

/// Parameter-shift gradient over any backend. Adds two evaluations per active
/// slot to the counter, when one is given.
Gradient parameter_shift_gradient(const EnergyBackend& backend, const ParameterVector& params,
                                  const ActivationMask& mask, EvaluationCounter* counter = nullptr);

}  // namespace ravqe
