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
#include <random>

#include "ravqe/gradients.hpp"
#include "ravqe/scheduler.hpp"
#include "test_util.hpp"

namespace ravqe {
namespace {

Strategy make(StrategyKind kind, int m = 10) {
  Strategy s;
  s.kind = kind;
  s.m = m;
  return s;
}

TEST(InitSchedule, RaMeanActiveCountIsBinomial) {
  const CircuitLayout layout(12, 7);  // p = 252
  const Strategy s = make(StrategyKind::RA);
  double sum = 0.0;
  const int seeds = 10000;
  for (int k = 0; k < seeds; ++k) {
    std::mt19937_64 rng(k);
    sum += static_cast<double>(init_schedule(s, layout, rng).state.mask.count());
  }
  const double mean = sum / seeds;
  const double sigma = std::sqrt(252 * 0.1 * 0.9 / seeds);
  EXPECT_NEAR(mean, 25.2, 3 * sigma);
}

TEST(InitSchedule, PlainAllActiveRandom) {
  const CircuitLayout layout(4, 2);
  std::mt19937_64 rng(1);
  const auto init = init_schedule(make(StrategyKind::Plain), layout, rng);
  EXPECT_TRUE(init.state.mask.all());
  for (double v : init.params.values) EXPECT_NE(v, 0.0);
  EXPECT_EQ(init.state.stages, 1);
}

TEST(InitSchedule, PlainStarSubsetRandomRestZero) {
  const CircuitLayout layout(6, 4);  // p = 72
  std::mt19937_64 rng(2);
  const auto init = init_schedule(make(StrategyKind::PlainStar), layout, rng);
  EXPECT_TRUE(init.state.mask.all());
  std::size_t nonzero = 0;
  for (double v : init.params.values) nonzero += v != 0.0;
  EXPECT_EQ(nonzero, 7u);
}

TEST(InitSchedule, LaaFirstLayerOnly) {
  const CircuitLayout layout(4, 3);
  std::mt19937_64 rng(3);
  const auto init = init_schedule(make(StrategyKind::LAA), layout, rng);
  EXPECT_EQ(init.state.mask.count(), 12u);
  for (std::size_t k = 0; k < layout.size(); ++k) EXPECT_EQ(init.state.mask[k], layout[k].layer == 0);
  EXPECT_EQ(init.state.stages, 3);
}

TEST(InitSchedule, LpaLastLayerOnly) {
  const CircuitLayout layout(4, 3);
  std::mt19937_64 rng(4);
  const auto init = init_schedule(make(StrategyKind::LPA), layout, rng);
  for (std::size_t k = 0; k < layout.size(); ++k) EXPECT_EQ(init.state.mask[k], layout[k].layer == 2);
}

TEST(InitSchedule, Deterministic) {
  const CircuitLayout layout(6, 2);
  std::mt19937_64 a(9), b(9);
  const auto x = init_schedule(make(StrategyKind::RA), layout, a);
  const auto y = init_schedule(make(StrategyKind::RA), layout, b);
  EXPECT_EQ(x.params, y.params);
  EXPECT_EQ(x.state.mask, y.state.mask);
}

TEST(Advance, RaStructureFactorArithmetic) {
  // One slot with g = 0.55 before the initial decrement: inactive after 5
  // advances (g = 0.05), active after 6 (g = -0.05).
  const CircuitLayout layout(4, 1);
  const Strategy s = make(StrategyKind::RA);
  SchedulerState st;
  st.stages = 10;
  st.round = 0;
  st.mask = ActivationMask(layout.size());
  st.structure_factors.assign(layout.size(), 0.95);
  st.structure_factors[0] = 0.55;
  ParameterVector params(layout.size());
  for (int k = 0; k < 5; ++k) advance(st, s, layout, params);
  EXPECT_FALSE(st.mask[0]);
  EXPECT_NEAR(st.structure_factors[0], 0.05, 1e-12);
  advance(st, s, layout, params);
  EXPECT_TRUE(st.mask[0]);
  EXPECT_NEAR(st.structure_factors[0], -0.05, 1e-12);
}

TEST(Advance, RaFullyActiveAfterMRounds) {
  const CircuitLayout layout(6, 3);
  for (int seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    const Strategy s = make(StrategyKind::RA);
    auto init = init_schedule(s, layout, rng);
    for (int k = 1; k < s.m; ++k) EXPECT_TRUE(advance(init.state, s, layout, init.params));
    EXPECT_TRUE(init.state.fully_active());
    EXPECT_FALSE(advance(init.state, s, layout, init.params));
  }
}

TEST(Advance, MaskGrowsAndNewSlotsStartAtZero) {
  const CircuitLayout layout(4, 3);
  std::mt19937_64 rng(5);
  for (auto kind : {StrategyKind::RA, StrategyKind::LAA, StrategyKind::LPA}) {
    const Strategy s = make(kind, 4);
    auto init = init_schedule(s, layout, rng);
    while (!init.state.fully_active()) {
      const ActivationMask before = init.state.mask;
      const ParameterVector pb = init.params;
      ASSERT_TRUE(advance(init.state, s, layout, init.params));
      for (std::size_t k = 0; k < layout.size(); ++k) {
        if (before[k]) {
          EXPECT_TRUE(init.state.mask[k]);
          EXPECT_EQ(init.params[k], pb[k]);
        } else if (init.state.mask[k]) {
          EXPECT_EQ(init.params[k], 0.0);
        }
      }
    }
  }
}

TEST(Advance, EnergyContinuous) {
  const CircuitLayout layout(6, 3);
  const Observable h = build_xxz(6, 1.0);
  const StateVector init_state = init_singlet_chain(6);
  std::mt19937_64 rng(6);
  for (auto kind : {StrategyKind::RA, StrategyKind::LAA, StrategyKind::LPA}) {
    const Strategy s = make(kind, 5);
    auto init = init_schedule(s, layout, rng);
    while (!init.state.fully_active()) {
      const double before = circuit_energy(layout, init.params, init.state.mask, h, init_state);
      advance(init.state, s, layout, init.params);
      const double after = circuit_energy(layout, init.params, init.state.mask, h, init_state);
      EXPECT_LT(std::abs(after - before), 1e-12);
    }
  }
}

TEST(Advance, PlainNeverAdvances) {
  const CircuitLayout layout(4, 1);
  std::mt19937_64 rng(7);
  for (auto kind : {StrategyKind::Plain, StrategyKind::PlainStar}) {
    auto init = init_schedule(make(kind), layout, rng);
    EXPECT_FALSE(advance(init.state, make(kind), layout, init.params));
  }
}

TEST(ActivationIterations, EqualPartition) {
  const auto ev = activation_iterations({}, 5000, 10);
  ASSERT_EQ(ev.size(), 9u);
  for (int k = 0; k < 9; ++k) EXPECT_EQ(ev[k], 500 * (k + 1));
  EXPECT_TRUE(activation_iterations({}, 5000, 1).empty());
  EXPECT_THROW(activation_iterations({}, 5, 10), std::invalid_argument);
}

TEST(ActivationIterations, PlateauOnConstantTrajectory) {
  ActivationTrigger t;
  t.kind = TriggerKind::Plateau;
  t.tolerance = 1e-6;
  t.window = 50;
  const std::vector<double> flat(5000, -3.0);
  const auto ev = plateau_activation_iterations(t, flat, 5000, 10);
  ASSERT_FALSE(ev.empty());
  EXPECT_EQ(ev.front(), 50);
  EXPECT_EQ(ev.size(), 9u);
  for (std::size_t k = 1; k < ev.size(); ++k) EXPECT_EQ(ev[k] - ev[k - 1], 50);
}

TEST(ActivationIterations, PlateauCapFiresRemaining) {
  ActivationTrigger t;
  t.kind = TriggerKind::Plateau;
  std::vector<double> falling(1000);
  for (int k = 0; k < 1000; ++k) falling[k] = -static_cast<double>(k);
  const auto ev = plateau_activation_iterations(t, falling, 1000, 4);
  ASSERT_EQ(ev.size(), 3u);
  for (int e : ev) EXPECT_EQ(e, 750);
}

TEST(StrategyNames, RoundTrip) {
  for (auto k : {StrategyKind::Plain, StrategyKind::PlainStar, StrategyKind::RA, StrategyKind::LAA,
                 StrategyKind::LPA})
    EXPECT_EQ(strategy_kind_from_string(to_string(k)), k);
  EXPECT_EQ(strategy_kind_from_string("plain*"), StrategyKind::PlainStar);
  EXPECT_THROW(strategy_kind_from_string("adapt"), std::invalid_argument);
  Strategy bad;
  bad.m = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace ravqe
