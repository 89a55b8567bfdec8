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
#include <string>
#include <vector>

#include "ravqe/circuit.hpp"
#include "ravqe/gradients.hpp"

namespace ravqe {

enum class OptimizerKind : std::uint8_t { Adam, SGD };

std::string to_string(OptimizerKind k);
OptimizerKind optimizer_kind_from_string(const std::string& s);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Adam;
  double learning_rate = 0.01;
  double decay_rate = 0.9;
  int decay_steps = 100;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int maxiter = 5000;

  void validate() const;
};

/// Step counter plus Adam moments. Moments of slots that never received a
/// gradient stay exactly zero, so a freshly activated slot starts from zero.
struct OptimizerState {
  std::int64_t t = 0;
  std::vector<double> m;
  std::vector<double> v;

  OptimizerState() = default;
  explicit OptimizerState(std::size_t p) : m(p, 0.0), v(p, 0.0) {}
};

/// learning_rate * decay_rate^(t / decay_steps), continuous exponent.
double lr_at(const OptimizerConfig& config, std::int64_t t);

/// One descent step on the active entries; inactive entries are untouched.
void step(OptimizerState& state, const OptimizerConfig& config, ParameterVector& params,
          const Gradient& grad, const ActivationMask& mask);

}  // namespace ravqe
