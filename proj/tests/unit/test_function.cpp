/*
    Copyright (C) 2026 The glslab Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "glslab/errors.hpp"
#include "glslab/function.hpp"

using namespace glslab;

TEST(UnitIntervalFunction, ConstantEverywhere) {
  const auto f = UnitIntervalFunction::constant(2.5);
  EXPECT_DOUBLE_EQ(f(0.0), 2.5);
  EXPECT_DOUBLE_EQ(f(0.7), 2.5);
  EXPECT_DOUBLE_EQ(f.support_measure(), 1.0);
  EXPECT_FALSE(f.singular_at_zero());
}

TEST(UnitIntervalFunction, SqrtLogValues) {
  const auto f = UnitIntervalFunction::sqrt_log();
  EXPECT_NEAR(f(std::exp(-4.0)), 2.0, 1e-14);
  EXPECT_NEAR(f(0.5), std::sqrt(std::log(2.0)), 1e-15);
  EXPECT_TRUE(f.singular_at_zero());
}

TEST(UnitIntervalFunction, IndicatorSupport) {
  const auto f = UnitIntervalFunction::indicator(0.25, 3.0);
  EXPECT_DOUBLE_EQ(f(0.1), 3.0);
  EXPECT_DOUBLE_EQ(f(0.25), 0.0);
  EXPECT_DOUBLE_EQ(f(0.9), 0.0);
  EXPECT_DOUBLE_EQ(f.support_measure(), 0.25);
  EXPECT_THROW(UnitIntervalFunction::indicator(0.0), ParameterError);
  EXPECT_THROW(UnitIntervalFunction::indicator(1.5), ParameterError);
}

TEST(UnitIntervalFunction, MappedOntoReversesOrientation) {
  // g(x) = 2 f((0.5 - x) / 0.25) on [0.25, 0.5).
  const auto g = UnitIntervalFunction::sqrt_log().mapped_onto(0.25, 0.5, 0.25, 2.0);
  const double x = 0.3;
  EXPECT_NEAR(g(x), 2.0 * std::sqrt(-std::log((0.5 - x) / 0.25)), 1e-14);
  EXPECT_DOUBLE_EQ(g(0.2), 0.0);
  EXPECT_DOUBLE_EQ(g(0.5), 0.0);
  EXPECT_FALSE(g.singular_at_zero());
  EXPECT_TRUE(UnitIntervalFunction::sqrt_log().mapped_onto(0.5, 1.0, 0.5).singular_at_one());
}

TEST(UnitIntervalFunction, MappedIndicatorKeepsMass) {
  const auto g = UnitIntervalFunction::indicator(0.5).mapped_onto(0.2, 0.6, 0.4, 3.0);
  // Inner support (0, 0.5) lands on (0.4, 0.6].
  EXPECT_DOUBLE_EQ(g(0.5), 3.0);
  EXPECT_DOUBLE_EQ(g(0.3), 0.0);
  EXPECT_NEAR(g.support_measure(), 0.2, 1e-16);
}

TEST(UnitIntervalFunction, BlockUnionRejectsOverlap) {
  const auto one = UnitIntervalFunction::constant(1.0);
  std::vector<UnitIntervalFunction> blocks{one.mapped_onto(0.0, 0.5, 0.5), one.mapped_onto(0.4, 0.8, 0.4)};
  EXPECT_THROW(UnitIntervalFunction::block_union(blocks), InvariantError);
}

TEST(UnitIntervalFunction, BlockUnionEvaluatesEachBlock) {
  const auto one = UnitIntervalFunction::constant(1.0);
  std::vector<UnitIntervalFunction> blocks{one.mapped_onto(0.0, 0.5, 0.5, 2.0),
                                           one.mapped_onto(0.5, 0.75, 0.25, 5.0)};
  const auto u = UnitIntervalFunction::block_union(blocks);
  EXPECT_DOUBLE_EQ(u(0.1), 2.0);
  EXPECT_DOUBLE_EQ(u(0.6), 5.0);
  EXPECT_DOUBLE_EQ(u(0.9), 0.0);
  EXPECT_DOUBLE_EQ(evaluate_block_union(blocks, 0.6), 5.0);
  EXPECT_EQ(u.locate(0.9), -1);
}

TEST(UnitIntervalFunction, ScaledFlipsSign) {
  const auto f = UnitIntervalFunction::sqrt_log().scaled(-1.0);
  EXPECT_NEAR(f(std::exp(-1.0)), -1.0, 1e-15);
}

TEST(Kernel, SqrtLogLevelMeasureIsGaussianTail) {
  const auto k = Kernel::sqrt_log();
  for (double u : {0.5, 1.0, 1.5, 3.0}) EXPECT_NEAR(k.level_measure(1.0, u), std::exp(-u * u), 1e-15);
  EXPECT_NEAR(k.log_level_measure(1.0, 100.0), -1e4, 1e-9);
}

TEST(Kernel, CustomMonotoneLevelMeasure) {
  const auto k = Kernel::custom("linear", [](double s) { return s; }, false, false,
                                Monotonicity::kIncreasing);
  EXPECT_NEAR(k.level_measure(1.0, 0.3), 0.7, 1e-12);
  const auto d = Kernel::custom("one-minus", [](double s) { return 1.0 - s; }, false, false,
                                Monotonicity::kDecreasing);
  EXPECT_NEAR(d.level_measure(2.0, 1.0), 0.5, 1e-12);
}

TEST(Kernel, UnitLevelMeasureIsStep) {
  const auto k = Kernel::unit();
  EXPECT_EQ(k.level_measure(2.0, 1.0), 1.0);
  EXPECT_EQ(k.level_measure(2.0, 2.0), 0.0);
  EXPECT_EQ(k.level_measure(2.0, -1.0), 1.0);
}
