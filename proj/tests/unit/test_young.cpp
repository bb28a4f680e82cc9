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
#include "glslab/young.hpp"

using namespace glslab;

TEST(YoungFunction, BuiltInValues) {
  EXPECT_DOUBLE_EQ(YoungFunction::power(3.0)(-2.0), 8.0);
  EXPECT_NEAR(YoungFunction::exp_square()(2.0), std::exp(2.0) - 1.0, 1e-14);
  EXPECT_NEAR(YoungFunction::exp_linear()(1.0), std::exp(1.0) - 1.0, 1e-15);
  EXPECT_EQ(YoungFunction::exp_linear()(0.0), 0.0);
}

TEST(YoungFunction, LogValueWithoutOverflow) {
  const auto phi = YoungFunction::exp_square();
  EXPECT_NEAR(phi.log_value(100.0), 5000.0, 1e-9);
  EXPECT_NEAR(YoungFunction::power(2.0).log_value(1e200), 2.0 * std::log(1e200), 1e-9);
}

TEST(YoungFunction, CertificatesAcceptBuiltIns) {
  for (const auto& phi : {YoungFunction::power(1.0), YoungFunction::power(2.5),
                          YoungFunction::exp_square(), YoungFunction::exp_linear()}) {
    EXPECT_TRUE(phi.certificate().convex) << phi.name();
    EXPECT_TRUE(phi.certificate().increasing) << phi.name();
  }
}

TEST(YoungFunction, RejectsNonConvexCandidates) {
  EXPECT_THROW(YoungFunction::power(0.5), ParameterError);
  EXPECT_THROW(YoungFunction::custom("sqrt", [](double u) { return std::sqrt(u); }), ParameterError);
  EXPECT_THROW(YoungFunction::custom("shifted", [](double u) { return u * u + 1.0; }), ParameterError);
}

TEST(YoungFunction, RecordsRoundTrip) {
  for (const char* record : {"power:2", "exp-square", "exp-linear", "power:3.5"}) {
    EXPECT_EQ(YoungFunction::from_record(record).to_record(), record);
  }
  EXPECT_THROW(YoungFunction::from_record("cosh"), ParameterError);
  EXPECT_THROW(YoungFunction::from_record("power:x"), ParameterError);
}
