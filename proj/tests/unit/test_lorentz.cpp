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

#include "glslab/errors.hpp"
#include "glslab/norms.hpp"
#include "oracles.hpp"

using namespace glslab;

TEST(Rearrangement, SqrtLogIsItsOwnRearrangement) {
  const auto f = UnitIntervalFunction::sqrt_log();
  for (double s : {1e-6, 0.01, 0.3, 0.9}) EXPECT_NEAR(rearranged(f, s), f(s), 1e-9) << s;
}

TEST(Rearrangement, BlockUnionSortsLevels) {
  const auto one = UnitIntervalFunction::constant(1.0);
  std::vector<UnitIntervalFunction> blocks{one.mapped_onto(0.0, 0.5, 0.5, 1.0),
                                           one.mapped_onto(0.5, 0.75, 0.25, 4.0)};
  const auto u = UnitIntervalFunction::block_union(blocks);
  EXPECT_DOUBLE_EQ(rearranged(u, 0.1), 4.0);
  EXPECT_DOUBLE_EQ(rearranged(u, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(rearranged(u, 0.9), 0.0);
  const auto star = decreasing_rearrangement(u);
  EXPECT_NEAR(lp_norm(star, 2.0).value, lp_norm(u, 2.0).value, 1e-12);
}

TEST(RearrangedMean, ConstantMeanIsConstant) {
  const auto r = rearranged_mean(UnitIntervalFunction::constant(2.0), std::log(0.25));
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r.value, 2.0, 1e-14);
}

TEST(LorentzNorm, ConstantUnderSquareRootWeight) {
  const auto r = lorentz_norm(UnitIntervalFunction::constant(1.0), LorentzWeight::power(0.5));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  ASSERT_TRUE(r.argmax.has_value());
  EXPECT_NEAR(*r.argmax, 1.0, 1e-12);
}

TEST(LorentzNorm, SqrtLogUnderSquareRootWeight) {
  // Sup over a 200-point grid in t; the grid spacing bounds the deficit.
  const auto r = lorentz_norm(UnitIntervalFunction::sqrt_log(), LorentzWeight::power(0.5));
  EXPECT_FALSE(r.divergent);
  EXPECT_LE(r.value, oracle::kLorentzSqrtLogHalf * (1.0 + 1e-12));
  EXPECT_LT(oracle::rel_diff(r.value, oracle::kLorentzSqrtLogHalf), 1e-5);
}

TEST(LorentzNorm, UnboundedFunctionWithLinearWeightDiverges) {
  // (1/t) integral_0^t f* -> f*(0+) = inf for the sqrt-log profile.
  const auto r = lorentz_norm(UnitIntervalFunction::sqrt_log(), LorentzWeight::power(1.0));
  EXPECT_TRUE(r.divergent);
}

TEST(LorentzWeight, RejectsDecreasing) {
  EXPECT_THROW(LorentzWeight::power(-1.0), ParameterError);
  EXPECT_THROW(LorentzWeight::custom("dec", [](double t) { return 1.0 / t; }), ParameterError);
}

TEST(LorentzGrid, StandardGridIsDecreasingInT) {
  const auto g = LorentzGrid::standard();
  ASSERT_FALSE(g.log_t.empty());
  EXPECT_DOUBLE_EQ(g.log_t.front(), 0.0);
  EXPECT_THROW(LorentzGrid::from_values({0.5, 2.0}), ParameterError);
}
