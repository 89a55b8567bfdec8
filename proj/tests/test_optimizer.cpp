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

#include "ravqe/optimizer.hpp"

namespace ravqe {
namespace {

Gradient grad_of(std::vector<double> v) { return Gradient{std::move(v)}; }

TEST(LearningRate, Decay) {
  const OptimizerConfig c;
  EXPECT_DOUBLE_EQ(lr_at(c, 0), 0.01);
  EXPECT_NEAR(lr_at(c, 100), 0.009, 1e-15);
  EXPECT_NEAR(lr_at(c, 200), 0.0081, 1e-15);
  EXPECT_NEAR(lr_at(c, 50), 0.01 * std::sqrt(0.9), 1e-15);
}

TEST(Step, ZeroGradientLeavesParams) {
  for (auto kind : {OptimizerKind::Adam, OptimizerKind::SGD}) {
    OptimizerConfig c;
    c.kind = kind;
    OptimizerState st(3);
    ParameterVector p(std::vector<double>{0.1, 0.2, 0.3});
    const ParameterVector before = p;
    step(st, c, p, grad_of({0, 0, 0}), ActivationMask(3, true));
    EXPECT_EQ(p, before);
  }
}

TEST(Step, SgdFirstStep) {
  OptimizerConfig c;
  c.kind = OptimizerKind::SGD;
  OptimizerState st(2);
  ParameterVector p(std::vector<double>{1.0, 1.0});
  step(st, c, p, grad_of({2.0, 0.0}), ActivationMask(2, true));
  EXPECT_NEAR(p[0], 1.0 - 0.02, 1e-15);
  EXPECT_EQ(p[1], 1.0);
}

TEST(Step, AdamFirstStepIsLearningRateTimesSign) {
  const OptimizerConfig c;
  OptimizerState st(1);
  ParameterVector p(std::vector<double>{0.0});
  step(st, c, p, grad_of({0.5}), ActivationMask(1, true));
  // m_hat = 0.5, v_hat = 0.25: update = 0.01 * 0.5 / (0.5 + 1e-8)
  EXPECT_NEAR(p[0], -0.01 * 0.5 / (0.5 + 1e-8), 1e-16);
  EXPECT_NEAR(p[0], -0.01, 1e-9);
}

TEST(Step, InactiveSlotsUntouched) {
  const OptimizerConfig c;
  OptimizerState st(2);
  ActivationMask mask(2);
  mask.set(0);
  ParameterVector p(std::vector<double>{0.0, 0.5});
  for (int k = 0; k < 10; ++k) step(st, c, p, grad_of({1.0, 1.0}), mask);
  EXPECT_EQ(p[1], 0.5);
  EXPECT_EQ(st.m[1], 0.0);
  EXPECT_EQ(st.v[1], 0.0);
  EXPECT_EQ(st.t, 10);
}

TEST(Step, SizeMismatchThrows) {
  const OptimizerConfig c;
  OptimizerState st(2);
  ParameterVector p(2);
  EXPECT_THROW(step(st, c, p, grad_of({1.0}), ActivationMask(2, true)), std::invalid_argument);
}

TEST(Config, Validation) {
  OptimizerConfig c;
  c.learning_rate = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = OptimizerConfig{};
  c.decay_steps = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_EQ(optimizer_kind_from_string("sgd"), OptimizerKind::SGD);
  EXPECT_THROW(optimizer_kind_from_string("rmsprop"), std::invalid_argument);
}

}  // namespace
}  // namespace ravqe
