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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ravqe/optimizer.hpp"
#include "ravqe/pauli.hpp"
#include "ravqe/scheduler.hpp"
#include "ravqe/stats.hpp"

namespace ravqe {

enum class BackendKind : std::uint8_t { Statevector, DensityMatrix };
std::string to_string(BackendKind k);
BackendKind backend_kind_from_string(const std::string& s);

/// One batch of independent VQE trials on the XXZ chain from the singlet state.
struct TrialConfig {
  Strategy strategy;
  int n = 8;
  int l = 2;
  double jz = 1.0;
  OptimizerConfig optimizer;
  int trials = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  BackendKind backend = BackendKind::Statevector;  // statevector: adjoint gradients
  double p_noise = 0.0;                            // density matrix: parameter shift
  int trajectory_every = 10;
  bool timing = false;

  void validate() const;
};

struct ActivationEvent {
  int iteration = 0;
  double energy_before = 0.0;
  double energy_after = 0.0;
  std::size_t active_after = 0;
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  StrategyKind strategy = StrategyKind::Plain;
  int n = 0;
  int l = 0;
  double jz = 0.0;
  OptimizerConfig optimizer;
  std::vector<std::pair<int, double>> trajectory;  // (iteration, energy before that step)
  double final_energy = 0.0;
  std::vector<ActivationEvent> events;
  std::uint64_t evaluations = 0;
  bool accounting = true;
  std::optional<double> wall_seconds;
  std::string error;  // non-empty when the trial failed

  bool ok() const { return error.empty(); }
};

/// Seed of trial `index`; the whole trial runs off this one stream.
std::uint64_t trial_seed(std::uint64_t master, int index);

TrialRecord run_trial(const TrialConfig& config, int index);

/// Trials in index order. Exceptions inside a trial land in its error field.
std::vector<TrialRecord> run_trials(const TrialConfig& config);

/// Parameter-shift accounting: 2 x active slots, summed over iterations.
std::uint64_t shift_evaluation_counter(const TrialRecord& record);

struct SummaryRow {
  StrategyKind strategy = StrategyKind::Plain;
  int n = 0;
  int l = 0;
  double jz = 0.0;
  std::size_t trials = 0;
  std::size_t failed = 0;
  double exact = 0.0;
  BoxStats box;
  double best = 0.0;
  double success_fraction = 0.0;  // relative error <= success_tolerance
  double mean_relative_error = 0.0;
};

inline constexpr double kSuccessTolerance = 0.01;

SummaryRow summarize(const TrialConfig& config, const std::vector<TrialRecord>& records, double exact,
                     QuartileConvention convention = QuartileConvention::Inclusive);

std::vector<double> final_energies(const std::vector<TrialRecord>& records);

struct VariancePoint {
  double density = 0.0;
  double variance = 0.0;  // occurrence-weighted mean of per-slot variances
  double std_error = 0.0; // grouped jackknife
  std::size_t occurrences = 0;
};

/// Gradient variance over random masks and angles, singlet initial state.
/// Each sample draws a Bernoulli(density) mask and theta ~ U[0, 2pi) on active slots.
std::vector<VariancePoint> gradient_variance_experiment(const Observable& obs, int l,
                                                        const std::vector<double>& densities,
                                                        int samples, std::uint64_t seed, int workers = 1);

/// Gate-count model of plain training versus RA with m rounds, in natural logs.
struct ResourceModel {
  double log_plain = 0.0;     // log(2 p^2 e^{2p})
  double log_ra = 0.0;        // log of the finite-m average
  double log_ra_limit = 0.0;  // m -> infinity integral, closed form
  double ratio = 0.0;         // exp(log_ra - log_plain)
  double leading_order = 0.0; // 1 / (2p)
};

ResourceModel resource_model(std::int64_t p_params, std::int64_t m);

}  // namespace ravqe
