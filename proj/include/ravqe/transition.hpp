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

#include "ravqe/stabilizer.hpp"

namespace ravqe {

enum class TransitionInit : std::uint8_t { Singlet, Zero };
std::string to_string(TransitionInit k);
TransitionInit transition_init_from_string(const std::string& s);

struct TransitionConfig {
  int L = 8;
  double p = 1.0;
  int blocks = 0;  // 0: 8 L full HVA layers
  int samples = 200;
  TransitionInit init = TransitionInit::Singlet;
  std::uint64_t seed = 0;
  int workers = 1;

  int resolved_blocks() const { return blocks > 0 ? blocks : 8 * L; }
  void validate() const;
};

struct TransitionCurve {
  int L = 0;
  double p = 0.0;
  int blocks = 0;
  int samples = 0;
  double mean = 0.0;    // half-chain entropy, bits
  double std_error = 0.0;  // of the mean
  std::vector<int> per_sample;
};

/// One realization: the Cliffords that replace the active slots, in order.
struct CliffordGate {
  int i = 0;
  int j = 0;
  TwoQubitClifford element;
};

/// Slot pattern of `blocks` HVA layers; each slot kept with probability p and
/// given a fresh uniform Clifford.
std::vector<CliffordGate> sample_clifford_circuit(int L, int blocks, double p, std::mt19937_64& rng);

/// Per-sample stream for (L, p) grid point `sample`.
std::mt19937_64 transition_rng(std::uint64_t seed, int L, double p, int sample);

TransitionCurve run_transition(const TransitionConfig& config);

/// Same circuits run on the dense backend; per-sample entropies in bits. L <= 10.
std::vector<double> statevector_crosscheck(const TransitionConfig& config);

struct CollapseResult {
  double nu = 0.0;
  double cost = 0.0;
  bool degenerate = false;
  std::vector<double> nu_grid;
  std::vector<double> costs;
};

/// Finite-size collapse y = F((p - p_c) L^{1/nu}). For each nu the cost is the
/// mean squared gap between every point and the average of the other sizes'
/// piecewise-linear curves at its x; points no other size covers are skipped.
CollapseResult data_collapse(const std::vector<TransitionCurve>& curves, double p_c,
                             const std::vector<double>& nu_grid);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace ravqe
