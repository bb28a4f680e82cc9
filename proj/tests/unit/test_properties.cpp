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

#include <algorithm>
#include <cmath>
#include <vector>

#include "generators.hpp"
#include "glslab/counterexample.hpp"
#include "glslab/montecarlo.hpp"
#include "glslab/random.hpp"
#include "glslab/norms.hpp"
#include "glslab/young.hpp"
#include "oracles.hpp"

using namespace glslab;

TEST(Property, DegenerateGlsEqualsLpOnRandomUnions) {
  gen::Source src(20261017);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = src.block_union();
    for (double r : {1.0, 2.0, 3.0, 4.0}) {
      const double lp = lp_norm(f, r).value;
      EXPECT_LT(oracle::rel_diff(gls_norm(f, PsiFunction::degenerate(r)).value, lp), 1e-9)
          << trial << " " << r;
    }
  }
}

TEST(Property, LuxemburgRootCertificateOnRandomUnions) {
  gen::Source src(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = src.block_union();
    for (const auto& Phi : {YoungFunction::exp_square(), YoungFunction::exp_linear()}) {
      const auto r = luxemburg_norm(f, Phi);
      const double m = luxemburg_modular(f, Phi, r.value).value;
      EXPECT_LE(m, 1.0) << trial;
      EXPECT_GE(m, 1.0 - 1e-6) << trial;
    }
  }
}

TEST(Property, LpNormMonotoneInP) {
  gen::Source src(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = src.block_union();
    double previous = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0}) {
      const double v = lp_norm(f, p).value;
      EXPECT_GE(v, previous * (1.0 - 1e-12));
      previous = v;
    }
  }
}

TEST(Property, DisjointIdentityForLpPowers) {
  gen::Source src(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = src.block_union();
    for (double p : {1.0, 2.5}) {
      double sum = 0.0;
      for (const auto& piece : f.pieces()) {
        const auto single = UnitIntervalFunction::from_pieces({piece});
        sum += std::pow(lp_norm(single, p).value, p);
      }
      EXPECT_LT(oracle::rel_diff(std::pow(lp_norm(f, p).value, p), sum), 1e-10);
    }
  }
}

TEST(Property, BlocksAreDisjoint) {
  const auto s = ProcessSpec::build(0.5, UnitIntervalFunction::sqrt_log(), 1000);
  std::vector<UnitIntervalFunction> blocks;
  for (std::uint64_t n = 1; n <= 50; ++n) blocks.push_back(block(s, n));
  for (int i = 0; i < 20000; ++i) {
    const double x = (i + 0.5) / 20000.0 * s.a(1);
    int nonzero = 0;
    for (const auto& b : blocks) nonzero += b(x) != 0.0;
    EXPECT_LE(nonzero, 1) << x;
  }
}

TEST(Property, EnvelopeEqualsPointwiseSum) {
  const auto s = ProcessSpec::build(1.0, UnitIntervalFunction::sqrt_log(), 2000);
  std::vector<UnitIntervalFunction> blocks;
  for (std::uint64_t n = 1; n <= s.nmax(); ++n) blocks.push_back(block(s, n));
  const auto g = envelope(s);
  RandomStream r(21);
  for (int i = 0; i < 10000; ++i) {
    const double x = r.uniform();
    double sum = 0.0;
    double sup = 0.0;
    for (const auto& b : blocks) {
      sum += b(x);
      sup = std::max(sup, b(x));
    }
    EXPECT_EQ(g(x), sum);
    EXPECT_EQ(sup, sum);
    if (i % 50 == 0) EXPECT_EQ(evaluate_block_union(blocks, x), sum);
  }
}

TEST(Property, UniformFourthMomentBound) {
  for (double beta : {0.5, 1.0}) {
    const auto s = ProcessSpec::build(beta, UnitIntervalFunction::constant(1.0));
    const double bound = s.normalization() * std::pow(s.nu(4.0).value, 4.0);
    for (std::uint64_t n = 1; n <= 50; ++n) {
      for (double p : {1.0, 2.0, 3.0, 3.9, 4.0}) {
        EXPECT_LE(std::pow(lp_norm(block(s, n), p).value, p), bound * (1.0 + 1e-9));
      }
    }
  }
}

TEST(Property, AsymptoticDifferencesShrink) {
  const auto s = ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0));
  std::vector<double> scaled;
  for (int k = 4; k <= 20; ++k) {
    const double gap = std::ldexp(1.0, -k);
    const auto b = sup_lp_series_at_gap(s, gap);
    scaled.push_back(std::pow(gap, 0.25) * std::pow(b.value, 1.0 / (4.0 - gap)));
  }
  for (std::size_t i = 4; i + 1 < scaled.size(); ++i) {
    EXPECT_LT(std::fabs(scaled[i + 1] - scaled[i]), std::fabs(scaled[i] - scaled[i - 1])) << i;
  }
}

TEST(Property, ArgmaxMovesTowardFour) {
  // Under psi = 1 on [1, 4] the maximizing p for the truncated envelope grows
  // with the truncation.
  double previous = 0.0;
  for (std::uint64_t nmax : {10u, 100u, 1000u, 10000u}) {
    const auto s = ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0), nmax);
    const auto r = gls_norm(envelope(s), PsiFunction::constant(1.0, 1.0, 4.0));
    ASSERT_TRUE(r.argmax.has_value());
    EXPECT_GE(*r.argmax, previous);
    EXPECT_NEAR(*r.argmax, 4.0, 1e-3);
    previous = *r.argmax;
  }
}

TEST(Property, TailCoverageAcrossSeeds) {
  const auto s = ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0));
  CounterexampleProcess proc(s);
  int covered = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const auto& t : tail_curve(proc, {1.5, 2.5}, SampleBatch::draw(derive_seed(1000, seed), 20000))) {
      ++total;
      covered += *t.z_score() <= 4.0;
    }
  }
  EXPECT_GE(covered, 0.95 * total);
}
