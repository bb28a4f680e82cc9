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
#include "glslab/montecarlo.hpp"
#include "oracles.hpp"

using namespace glslab;

namespace {

const ProcessSpec& spec_beta1() {
  static const ProcessSpec spec = ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0));
  return spec;
}

}  // namespace

TEST(SampleBatch, ReproducibleBySeed) {
  const auto a = SampleBatch::draw(5, 1000, true);
  const auto b = SampleBatch::draw(5, 1000, true);
  EXPECT_EQ(a.xs(), b.xs());
  EXPECT_EQ(a.signs(), b.signs());
  EXPECT_NE(a.xs(), SampleBatch::draw(6, 1000).xs());
  EXPECT_TRUE(SampleBatch::draw(5, 10).signs().empty());
  EXPECT_THROW(SampleBatch::draw(5, 0), ParameterError);
}

TEST(TailEstimate, StandardErrorFormula) {
  const auto t = make_tail_estimate(1.0, 25, 100);
  EXPECT_DOUBLE_EQ(t.estimate, 0.25);
  EXPECT_DOUBLE_EQ(t.std_error, std::sqrt(0.25 * 0.75 / 100));
  EXPECT_FALSE(t.z_score().has_value());
}

TEST(EstimateLp, EnvelopeMeanMatchesSeries) {
  CounterexampleProcess proc(spec_beta1());
  const auto m = estimate_lp(proc.envelope(), 1.0, SampleBatch::draw(17, 1000000));
  EXPECT_LT(std::fabs(m.estimate - oracle::kInvZeta5TimesZeta4), 3.0 * m.std_error);
}

TEST(EstimateLp, ZeroFunction) {
  const auto m = estimate_lp(UnitIntervalFunction::constant(0.0), 2.0, SampleBatch::draw(1, 100));
  EXPECT_EQ(m.estimate, 0.0);
  EXPECT_EQ(m.std_error, 0.0);
}

TEST(TailCurve, SqrtLogGaussianTail) {
  const auto tails = tail_curve(UnitIntervalFunction::sqrt_log(), {0.5, 1.0, 1.5},
                                SampleBatch::draw(3, 1000000));
  for (const auto& t : tails) {
    EXPECT_LT(std::fabs(t.estimate - std::exp(-t.threshold * t.threshold)), 3.0 * t.std_error);
  }
}

TEST(TailCurve, ProcessExactOverlay) {
  CounterexampleProcess proc(spec_beta1());
  const auto tails = tail_curve(proc, {0.5, 1.5}, SampleBatch::draw(4, 100000));
  ASSERT_TRUE(tails[0].exact.has_value());
  EXPECT_EQ(tails[0].estimate, 1.0);
  EXPECT_NEAR(*tails[1].exact, oracle::kOneMinusInvZeta5, 1e-14);
  EXPECT_LT(*tails[1].z_score(), 4.0);
  EXPECT_THROW(tail_curve(proc, {1.0, 0.5}, SampleBatch::draw(4, 10)), ParameterError);
}

TEST(BorelCantelli, ConstantProfileSumsToOne) {
  const auto r = borel_cantelli_diagnostic(spec_beta1(), 0.5);
  EXPECT_NEAR(r.sum_lower, 1.0, 1e-12);
  EXPECT_LT(r.bracket_width(), 1e-6);
  EXPECT_NEAR(r.markov_bound, oracle::kInvZeta5TimesZeta4 / 0.5, 1e-9);
  EXPECT_TRUE(r.bound_holds);
  EXPECT_TRUE(r.partial_sums_monotone);
  for (std::uint64_t n = 1; n <= 100; ++n) {
    EXPECT_DOUBLE_EQ(r.block_probabilities[n - 1], spec_beta1().delta(n));
  }
}

TEST(BorelCantelli, LargeEpsilonKeepsOnlyLargeBlocks) {
  const auto r = borel_cantelli_diagnostic(spec_beta1(), 10.0);
  // Only blocks with c_n = n > 10 exceed.
  EXPECT_NEAR(r.sum_lower, spec_beta1().a(11) - spec_beta1().a(spec_beta1().nmax() + 1), 1e-12);
  EXPECT_EQ(r.block_probabilities[9], 0.0);
  EXPECT_GT(r.block_probabilities[10], 0.0);
  EXPECT_TRUE(r.bound_holds);
}

TEST(BorelCantelli, HugeEpsilonGivesZero) {
  const auto r = borel_cantelli_diagnostic(spec_beta1(), 1e9);
  EXPECT_EQ(r.sum_lower, 0.0);
  EXPECT_THROW(borel_cantelli_diagnostic(spec_beta1(), 0.0), ParameterError);
}

TEST(Partition, Constructors) {
  const auto d = Partition::dyadic(10);
  EXPECT_EQ(d.cells(), 5u);  // {1} {2,3} {4..7} {8..10} {inf}
  EXPECT_EQ(d.cell_of(TPoint::at(9)), 3u);
  EXPECT_EQ(d.cell_size(3), 3u);
  EXPECT_EQ(Partition::singletons(10).cells(), 11u);
  EXPECT_EQ(Partition::single_cell(10).cells(), 1u);
}

TEST(Partition, ExplicitCellsValidated) {
  std::vector<std::vector<TPoint>> cells{{TPoint::at(1), TPoint::at(2)}, {TPoint::infinity()}};
  EXPECT_NO_THROW(Partition::from_cells(2, cells));
  EXPECT_THROW(Partition::from_cells(3, cells), ParameterError);  // 3 missing
  cells[1].push_back(TPoint::at(2));
  EXPECT_THROW(Partition::from_cells(2, cells), ParameterError);  // 2 twice
}

TEST(UnionBound, SingletonPartitionIsTight) {
  CounterexampleProcess proc(spec_beta1());
  const auto batch = SampleBatch::draw(8, 100000);
  const auto r = union_bound_check(proc, Partition::singletons(proc.spec().nmax()), 1.5, batch);
  EXPECT_EQ(r.slack, 0.0);
  EXPECT_EQ(r.lhs.estimate, r.rhs);
  EXPECT_TRUE(r.holds());
  ASSERT_TRUE(r.exact_lhs.has_value());
  EXPECT_NEAR(*r.exact_lhs, oracle::kOneMinusInvZeta5, 1e-14);
}

TEST(UnionBound, SingleCellIdentity) {
  const auto proc = symmetrize(CounterexampleProcess(spec_beta1()), 3);
  const auto batch = SampleBatch::draw(9, 20000);
  for (double u : {-0.5, 0.0, 1.5}) {
    const auto r = union_bound_check(proc, Partition::single_cell(proc.spec().nmax()), u, batch);
    EXPECT_EQ(r.lhs.estimate, r.rhs) << u;
  }
}

TEST(UnionBound, ZeroLevelCoversEverything) {
  CounterexampleProcess proc(spec_beta1());
  const auto r = union_bound_check(proc, Partition::dyadic(proc.spec().nmax()), 0.0,
                                   SampleBatch::draw(10, 10000));
  EXPECT_EQ(r.lhs.estimate, 1.0);
  EXPECT_NEAR(*r.exact_lhs, 1.0, 1e-12);
}

TEST(UnionBound, NegativeLevelCountsEveryCell) {
  const auto proc = symmetrize(CounterexampleProcess(spec_beta1()), 4);
  const auto r = union_bound_check(proc, Partition::dyadic(proc.spec().nmax()), -1.0,
                                   SampleBatch::draw(11, 10000));
  EXPECT_EQ(r.lhs.estimate, 1.0);
  EXPECT_GT(r.rhs, static_cast<double>(r.cells) - 1.0 - 1e-12);
  EXPECT_TRUE(r.holds());
}

TEST(UnionBound, RejectsMismatchedTruncation) {
  CounterexampleProcess proc(spec_beta1());
  EXPECT_THROW(union_bound_check(proc, Partition::dyadic(10), 1.0, SampleBatch::draw(1, 10)),
               ParameterError);
}

TEST(SymmetrizedMean, CenteredForSmallIndices) {
  const auto batch = SampleBatch::draw(12, 100000, true);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto m = symmetrized_mean(spec_beta1(), n, batch);
    EXPECT_LE(std::fabs(m.mean), 4.0 * m.std_error) << n;
  }
  EXPECT_THROW(symmetrized_mean(spec_beta1(), 1, SampleBatch::draw(1, 10)), ParameterError);
}

TEST(EventualSmallness, ApproachesExactTail) {
  const auto rows = eventual_smallness(spec_beta1(), 0.5, {1, 2, 4, 8}, SampleBatch::draw(13, 200000));
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(*rows[i].estimate.exact, spec_beta1().a(rows[i].n + 1) - spec_beta1().a(spec_beta1().nmax() + 1), 1e-12);
    EXPECT_LT(*rows[i].estimate.z_score(), 4.0);
    if (i > 0) EXPECT_LE(rows[i].estimate.estimate, rows[i - 1].estimate.estimate);
  }
}
