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

#include "ravqe/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace ravqe {

std::string to_string(OptimizerKind k) { return k == OptimizerKind::Adam ? "adam" : "sgd"; }

OptimizerKind optimizer_kind_from_string(const std::string& s) {
  if (s == "adam") return OptimizerKind::Adam;
  if (s == "sgd") return OptimizerKind::SGD;
  throw std::invalid_argument("unknown optimizer '" + s + "' (expected adam or sgd)");
}

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("optimizer: learning_rate must be > 0");
  if (!(decay_rate > 0.0 && decay_rate <= 1.0))
    throw std::invalid_argument("optimizer: decay_rate must be in (0, 1]");
  if (decay_steps < 1) throw std::invalid_argument("optimizer: decay_steps must be >= 1");
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0))
    throw std::invalid_argument("optimizer: Adam betas must be in [0, 1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("optimizer: epsilon must be > 0");
  if (maxiter < 0) throw std::invalid_argument("optimizer: maxiter must be >= 0");
}

double lr_at(const OptimizerConfig& config, std::int64_t t) {
  return config.learning_rate *
         std::pow(config.decay_rate, static_cast<double>(t) / static_cast<double>(config.decay_steps));
}

void step(OptimizerState& state, const OptimizerConfig& config, ParameterVector& params,
          const Gradient& grad, const ActivationMask& mask) {
  const std::size_t p = params.size();
  if (grad.size() != p || mask.size() != p)
    throw std::invalid_argument("optimizer step: gradient, mask and parameters differ in length");
  if (state.m.size() != p) {
    state.m.assign(p, 0.0);
    state.v.assign(p, 0.0);
  }

  const double lr = lr_at(config, state.t);
  if (config.kind == OptimizerKind::SGD) {
    for (std::size_t k = 0; k < p; ++k)
      if (mask[k]) params[k] -= lr * grad[k];
  } else {
    const double t1 = static_cast<double>(state.t + 1);
    const double c1 = 1.0 - std::pow(config.beta1, t1);
    const double c2 = 1.0 - std::pow(config.beta2, t1);
    for (std::size_t k = 0; k < p; ++k) {
      if (!mask[k]) continue;
      const double g = grad[k];
      state.m[k] = config.beta1 * state.m[k] + (1.0 - config.beta1) * g;
      state.v[k] = config.beta2 * state.v[k] + (1.0 - config.beta2) * g * g;
      const double m_hat = state.m[k] / c1;
      const double v_hat = state.v[k] / c2;
      params[k] -= lr * m_hat / (std::sqrt(v_hat) + config.epsilon);
    }
  }
  ++state.t;
}

}  // namespace ravqe
