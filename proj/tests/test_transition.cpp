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

#include <gtest/gtest.h>

#include <cmath>

#include "ravqe/transition.hpp"

namespace ravqe {
namespace {

TransitionConfig cfg(int L, double p, int samples, std::uint64_t seed = 1) {
  TransitionConfig c;
  c.L = L;
  c.p = p;
  c.samples = samples;
  c.seed = seed;
  return c;
}

TEST(RunTransition, NoGatesKeepsInitialEntropy) {
  EXPECT_EQ(run_transition(cfg(8, 0.0, 5)).mean, 0.0);
  auto c = cfg(8, 0.0, 5);
  c.init = TransitionInit::Zero;
  EXPECT_EQ(run_transition(c).mean, 0.0);
  EXPECT_EQ(run_transition(cfg(10, 0.0, 3)).mean, 1.0);  // half cut splits pair (4, 5)
}

TEST(RunTransition, DefaultBlocksAreEightL) {
  const auto c = run_transition(cfg(8, 0.1, 2));
  EXPECT_EQ(c.blocks, 64);
}

TEST(RunTransition, FullActivationSaturates) {
  const auto c = run_transition(cfg(8, 1.0, 100));
  EXPECT_GE(c.mean, 0.8 * (8 / 2 - 1));
  EXPECT_LE(c.mean, 4.0);
  for (int s : c.per_sample) {
    EXPECT_GE(s, 0);
    EXPECT_LE(s, 4);
  }
}

TEST(RunTransition, MonotoneInActivationRatio) {
  double prev = -1.0, prev_err = 0.0;
  for (double p : {0.0, 0.05, 0.1, 0.2, 0.4, 0.7, 1.0}) {
    const auto c = run_transition(cfg(8, p, 100, 3));
    EXPECT_GE(c.mean + 2.0 * std::hypot(c.std_error, prev_err), prev) << p;
    prev = c.mean;
    prev_err = c.std_error;
  }
}

TEST(RunTransition, DeterministicAcrossWorkers) {
  auto a = cfg(12, 0.3, 16, 7);
  auto b = a;
  b.workers = 4;
  const auto x = run_transition(a);
  const auto y = run_transition(b);
  EXPECT_EQ(x.per_sample, y.per_sample);
  EXPECT_EQ(x.mean, y.mean);
  EXPECT_EQ(x.std_error, y.std_error);
}

TEST(RunTransition, RejectsBadConfig) {
  EXPECT_THROW(run_transition(cfg(7, 0.5, 1)), std::invalid_argument);
  EXPECT_THROW(run_transition(cfg(8, 1.5, 1)), std::invalid_argument);
  EXPECT_THROW(run_transition(cfg(8, 0.5, 0)), std::invalid_argument);
}

TEST(Crosscheck, FourSitesAnySeed) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto c = cfg(4, 0.5, 10, seed);
    const auto dense = statevector_crosscheck(c);
    const auto tab = run_transition(c);
    for (int s = 0; s < c.samples; ++s) EXPECT_NEAR(dense[s], tab.per_sample[s], 1e-9);
  }
}

TEST(Crosscheck, SixSitesFullActivation) {
  auto c = cfg(6, 1.0, 20, 9);
  const auto dense = statevector_crosscheck(c);
  const auto tab = run_transition(c);
  for (int s = 0; s < c.samples; ++s) EXPECT_NEAR(dense[s], tab.per_sample[s], 1e-9);
}

TEST(Crosscheck, ZeroInitialState) {
  auto c = cfg(6, 0.4, 10, 4);
  c.init = TransitionInit::Zero;
  const auto dense = statevector_crosscheck(c);
  const auto tab = run_transition(c);
  for (int s = 0; s < c.samples; ++s) EXPECT_NEAR(dense[s], tab.per_sample[s], 1e-9);
}

TEST(Crosscheck, NoGates) {
  const auto dense = statevector_crosscheck(cfg(4, 0.0, 3));
  for (double v : dense) EXPECT_NEAR(v, 0.0, 1e-9);
  EXPECT_THROW(statevector_crosscheck(cfg(12, 0.5, 1)), std::invalid_argument);
}

std::vector<TransitionCurve> synthetic(double nu, bool size_dependent) {
  std::vector<TransitionCurve> out;
  for (int L : {8, 12, 16}) {
    for (int k = 1; k <= 20; ++k) {
      TransitionCurve c;
      c.L = L;
      c.p = 0.05 * k;
      const double x = size_dependent ? c.p * std::pow(L, 1.0 / nu) : c.p;
      c.mean = std::tanh(x);
      out.push_back(c);
    }
  }
  return out;
}

TEST(DataCollapse, RecoversSyntheticExponent) {
  const auto grid = linspace(0.5, 2.0, 151);
  const auto r = data_collapse(synthetic(1.0, true), 0.0, grid);
  EXPECT_NEAR(r.nu, 1.0, 0.01 + 1e-12);
  EXPECT_FALSE(r.degenerate);
  EXPECT_LT(r.cost, 1e-4);
}

TEST(DataCollapse, SizeIndependentCurvesFlagged) {
  const auto r = data_collapse(synthetic(1.0, false), 0.0, linspace(0.5, 2.0, 31));
  EXPECT_TRUE(r.degenerate);
}

TEST(DataCollapse, RejectsThinInput) {
  auto two_sizes = synthetic(1.0, true);
  std::erase_if(two_sizes, [](const TransitionCurve& c) { return c.L == 16; });
  EXPECT_THROW(data_collapse(two_sizes, 0.0, {1.0}), std::invalid_argument);
  std::vector<TransitionCurve> single_p;
  for (int L : {8, 12, 16}) single_p.push_back({L, 0.5, 0, 0, 1.0, 0.0, {}});
  EXPECT_THROW(data_collapse(single_p, 0.0, {1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace ravqe
