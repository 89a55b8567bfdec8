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

#include "ravqe/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ravqe {

std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::Plain:
      return "plain";
    case StrategyKind::PlainStar:
      return "plainstar";
    case StrategyKind::RA:
      return "ra";
    case StrategyKind::LAA:
      return "laa";
    case StrategyKind::LPA:
      return "lpa";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  if (s == "plain") return StrategyKind::Plain;
  if (s == "plainstar" || s == "plain*") return StrategyKind::PlainStar;
  if (s == "ra") return StrategyKind::RA;
  if (s == "laa") return StrategyKind::LAA;
  if (s == "lpa") return StrategyKind::LPA;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected plain, plainstar, ra, laa, lpa)");
}

std::string to_string(TriggerKind k) { return k == TriggerKind::Plateau ? "plateau" : "equal"; }

TriggerKind trigger_kind_from_string(const std::string& s) {
  if (s == "equal") return TriggerKind::EqualPartition;
  if (s == "plateau") return TriggerKind::Plateau;
  throw std::invalid_argument("unknown trigger '" + s + "' (expected equal or plateau)");
}

void Strategy::validate() const {
  if (m < 1) throw std::invalid_argument("strategy: m must be >= 1");
  if (trigger.kind == TriggerKind::Plateau) {
    if (trigger.window < 1) throw std::invalid_argument("strategy: plateau window must be >= 1");
    if (!(trigger.tolerance >= 0.0)) throw std::invalid_argument("strategy: plateau tolerance must be >= 0");
  }
}

int stage_count(const Strategy& strategy, const CircuitLayout& layout) {
  switch (strategy.kind) {
    case StrategyKind::RA:
      return strategy.m;
    case StrategyKind::LAA:
    case StrategyKind::LPA:
      return layout.depth();
    default:
      return 1;
  }
}

namespace {

double random_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
}

void activate_layer(SchedulerState& state, const CircuitLayout& layout, int layer,
                    ParameterVector& params, std::mt19937_64* rng) {
  for (std::size_t k : slots_of_layer(layout, layer)) {
    state.mask.set(k);
    params[k] = rng ? random_angle(*rng) : 0.0;
  }
}

}  // namespace

ScheduleInit init_schedule(const Strategy& strategy, const CircuitLayout& layout, std::mt19937_64& rng) {
  strategy.validate();
  const std::size_t p = layout.size();
  ScheduleInit out{ParameterVector(p), {}};
  SchedulerState& st = out.state;
  st.stages = stage_count(strategy, layout);
  st.mask = ActivationMask(p);

  switch (strategy.kind) {
    case StrategyKind::Plain:
      st.mask = ActivationMask(p, true);
      for (std::size_t k = 0; k < p; ++k) out.params[k] = random_angle(rng);
      st.round = 1;
      break;

    case StrategyKind::PlainStar: {
      st.mask = ActivationMask(p, true);
      // Partial Fisher-Yates: the first floor(p/m) entries form a uniform subset.
      std::vector<std::size_t> order(p);
      std::iota(order.begin(), order.end(), std::size_t{0});
      const std::size_t chosen = p / static_cast<std::size_t>(strategy.m);
      for (std::size_t k = 0; k < chosen; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, p - 1);
        std::swap(order[k], order[pick(rng)]);
      }
      for (std::size_t k = 0; k < chosen; ++k) out.params[order[k]] = random_angle(rng);
      st.round = 1;
      break;
    }

    case StrategyKind::RA: {
      st.structure_factors.resize(p);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double step = 1.0 / strategy.m;
      for (std::size_t k = 0; k < p; ++k) {
        double g = 0.0;
        while (g == 0.0) g = unit(rng);  // open interval (0, 1)
        st.structure_factors[k] = g - step;
      }
      st.round = 1;
      if (st.round >= strategy.m)
        for (double& g : st.structure_factors) g = std::min(g, 0.0);
      for (std::size_t k = 0; k < p; ++k) {
        if (st.structure_factors[k] <= 0.0) {
          st.mask.set(k);
          out.params[k] = random_angle(rng);
        }
      }
      break;
    }

    case StrategyKind::LAA:
      activate_layer(st, layout, 0, out.params, &rng);
      st.round = 1;
      break;

    case StrategyKind::LPA:
      activate_layer(st, layout, layout.depth() - 1, out.params, &rng);
      st.round = 1;
      break;
  }
  return out;
}

bool advance(SchedulerState& state, const Strategy& strategy, const CircuitLayout& layout,
             ParameterVector& params) {
  if (state.fully_active()) return false;
  switch (strategy.kind) {
    case StrategyKind::Plain:
    case StrategyKind::PlainStar:
      return false;

    case StrategyKind::RA: {
      const double step = 1.0 / strategy.m;
      ++state.round;
      for (double& g : state.structure_factors) g -= step;
      // g_init < 1, so after m rounds every factor is negative; clamp rounding residue.
      if (state.round >= strategy.m)
        for (double& g : state.structure_factors) g = std::min(g, 0.0);
      for (std::size_t k = 0; k < params.size(); ++k) {
        if (!state.mask[k] && state.structure_factors[k] <= 0.0) {
          state.mask.set(k);
          params[k] = 0.0;
        }
      }
      return true;
    }

    case StrategyKind::LAA:
      activate_layer(state, layout, state.round, params, nullptr);
      ++state.round;
      return true;

    case StrategyKind::LPA:
      activate_layer(state, layout, layout.depth() - 1 - state.round, params, nullptr);
      ++state.round;
      return true;
  }
  return false;
}

std::vector<int> activation_iterations(const ActivationTrigger& trigger, int maxiter, int stages) {
  if (stages < 1) throw std::invalid_argument("activation_iterations: stages must be >= 1");
  if (maxiter < stages) throw std::invalid_argument("activation_iterations: maxiter must be >= stages");
  if (trigger.kind != TriggerKind::EqualPartition)
    throw std::invalid_argument("activation_iterations: plateau events depend on the trajectory");
  std::vector<int> out;
  const int segment = maxiter / stages;
  for (int k = 1; k < stages; ++k) out.push_back(k * segment);
  return out;
}

ActivationClock::ActivationClock(const ActivationTrigger& trigger, int maxiter, int stages)
    : trigger_(trigger), stages_(stages) {
  if (stages < 1) throw std::invalid_argument("ActivationClock: stages must be >= 1");
  if (maxiter < stages) throw std::invalid_argument("ActivationClock: maxiter must be >= stages");
  cap_ = static_cast<int>(static_cast<std::int64_t>(maxiter) * (stages - 1) / stages);
  if (trigger_.kind == TriggerKind::EqualPartition) {
    schedule_ = activation_iterations(trigger_, maxiter, stages);
  }
}

int ActivationClock::due(int t, std::span<const double> energies) {
  const int remaining = stages_ - 1 - fired_;
  if (remaining <= 0) return 0;

  if (trigger_.kind == TriggerKind::EqualPartition) {
    const int n = static_cast<int>(std::count(schedule_.begin(), schedule_.end(), t));
    fired_ += n;
    return n;
  }

  if (t >= cap_) {
    fired_ += remaining;
    last_event_ = t;
    return remaining;
  }
  if (t - last_event_ >= trigger_.window && static_cast<std::size_t>(t) < energies.size()) {
    const double before = energies[t - trigger_.window];
    const double now = energies[t];
    const double improvement = (before - now) / std::max(std::abs(before), 1e-12);
    if (improvement < trigger_.tolerance) {
      ++fired_;
      last_event_ = t;
      return 1;
    }
  }
  return 0;
}

std::vector<int> plateau_activation_iterations(const ActivationTrigger& trigger,
                                               std::span<const double> energies, int maxiter,
                                               int stages) {
  ActivationClock clock(trigger, maxiter, stages);
  std::vector<int> out;
  const int horizon = std::min<int>(maxiter, static_cast<int>(energies.size()));
  for (int t = 0; t < horizon; ++t) {
    const int n = clock.due(t, energies.first(static_cast<std::size_t>(t) + 1));
    for (int k = 0; k < n; ++k) out.push_back(t);
  }
  return out;
}

}  // namespace ravqe
