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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ravqe/circuit.hpp"

namespace ravqe {

enum class StrategyKind : std::uint8_t { Plain, PlainStar, RA, LAA, LPA };

std::string to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);

enum class TriggerKind : std::uint8_t { EqualPartition, Plateau };

std::string to_string(TriggerKind k);
TriggerKind trigger_kind_from_string(const std::string& s);

struct ActivationTrigger {
  TriggerKind kind = TriggerKind::EqualPartition;
  double tolerance = 1e-6;  // plateau: relative improvement threshold
  int window = 50;          // plateau: trailing window, iterations
};

struct Strategy {
  StrategyKind kind = StrategyKind::RA;
  int m = 10;  // RA rounds; 1/m of the gates join per round on average
  ActivationTrigger trigger;

  double activation_fraction() const { return 1.0 / m; }
  void validate() const;
};

/// Per-trial activation bookkeeping.
///
/// For RA, structure_factors holds g per slot and a slot is active iff g <= 0.
/// For LAA/LPA, round is the number of active layers. The mask only grows.
struct SchedulerState {
  std::vector<double> structure_factors;
  int round = 0;
  int stages = 1;
  ActivationMask mask;

  bool fully_active() const { return mask.all(); }
};

struct ScheduleInit {
  ParameterVector params;
  SchedulerState state;
};

/// Number of training stages: m for RA, the depth for LAA/LPA, 1 otherwise.
int stage_count(const Strategy& strategy, const CircuitLayout& layout);

ScheduleInit init_schedule(const Strategy& strategy, const CircuitLayout& layout, std::mt19937_64& rng);

/// Activates the next batch at theta = 0. Returns false, changing nothing,
/// when the strategy has no further stage (Plain, Plain*, or already full).
bool advance(SchedulerState& state, const Strategy& strategy, const CircuitLayout& layout,
             ParameterVector& params);

/// Equal-partition event iterations k * floor(maxiter / stages), k = 1..stages-1.
std::vector<int> activation_iterations(const ActivationTrigger& trigger, int maxiter, int stages);

/// Online trigger. due() is called once per iteration t with the energy
/// history e[0..t] (e[t] measured before step t) and returns how many
/// advances to perform before that step.
class ActivationClock {
 public:
  ActivationClock(const ActivationTrigger& trigger, int maxiter, int stages);

  int due(int t, std::span<const double> energies);
  int events_fired() const { return fired_; }
  int cap() const { return cap_; }

 private:
  ActivationTrigger trigger_;
  int stages_;
  int cap_;
  int fired_ = 0;
  int last_event_ = 0;
  std::vector<int> schedule_;
};

/// Event iterations a plateau trigger would produce on a recorded trajectory.
std::vector<int> plateau_activation_iterations(const ActivationTrigger& trigger,
                                               std::span<const double> energies, int maxiter,
                                               int stages);

}  // namespace ravqe
