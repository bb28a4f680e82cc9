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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glslab/counterexample.hpp"
#include "glslab/function.hpp"

namespace glslab {

/// Uniform draws of x on (0,1) with optional per-draw Rademacher signs.
/// x comes from stream 0 of the master seed and signs from stream 1.
class SampleBatch {
 public:
  static SampleBatch draw(std::uint64_t seed, std::size_t count, bool with_signs = false);

  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t count() const noexcept { return xs_.size(); }
  const std::vector<double>& xs() const noexcept { return xs_; }
  /// Empty unless drawn with signs.
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

 private:
  std::uint64_t seed_ = 0;
  std::vector<double> xs_;
  std::vector<std::int8_t> signs_;
};

/// Welford mean and variance, accumulated in draw order.
class RunningMoments {
 public:
  void add(double value) noexcept {
    ++count_;
    const double d = value - mean_;
    mean_ += d / static_cast<double>(count_);
    m2_ += d * (value - mean_);
  }
  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double standard_error() const noexcept;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct TailEstimate {
  double threshold = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p (1 - p) / count)
  std::size_t count = 0;
  std::optional<double> exact;

  /// |estimate - exact| in standard errors; nullopt without an exact value.
  std::optional<double> z_score() const;
};

TailEstimate make_tail_estimate(double threshold, std::size_t exceed, std::size_t count);

struct MomentEstimate {
  double p = 1.0;
  double estimate = 0.0;      // (mean |g|^p)^(1/p)
  double std_error = 0.0;  // delta method
  double mean_power = 0.0;    // mean |g|^p
  double mean_power_error = 0.0;
  std::size_t count = 0;
};

/// Empirical |g|_p from the batch draws.
MomentEstimate estimate_lp(const UnitIntervalFunction& g, double p, const SampleBatch& batch);

/// Empirical P(|g| > u) for each u; ugrid must be increasing.
std::vector<TailEstimate> tail_curve(const UnitIntervalFunction& g, const std::vector<double>& ugrid,
                                     const SampleBatch& batch);
/// Empirical P(sup_t theta(t) > u), with the exact tail attached.
std::vector<TailEstimate> tail_curve(const CounterexampleProcess& process,
                                     const std::vector<double>& ugrid, const SampleBatch& batch);
/// Exact P(sup_t theta(t) > u) for the truncated process.
double exact_sup_tail(const CounterexampleProcess& process, double u);

struct BorelCantelliCheckpoint {
  std::uint64_t n = 0;
  double partial_sum = 0.0;    // sum_{m <= n} P(|g_m| > eps)
  double remainder_upper = 0.0;  // a_{n+1}, which dominates sum_{m > n} P(|g_m| > eps)
  double bound_partial = 0.0;  // sum_{m <= n} |g_m|_1 / eps
};

struct BorelCantelliReport {
  double epsilon = 0.0;
  /// Enclosure of the full series sum_n P(|g_n| > eps).
  double sum_lower = 0.0;
  double sum_upper = 0.0;
  /// Markov bound C(beta) nu(1) sum_n n^(-3 beta - 1) / eps, upper end of its bracket.
  double markov_bound = 0.0;
  bool bound_holds = false;
  bool partial_sums_monotone = false;
  std::vector<BorelCantelliCheckpoint> checkpoints;
  std::vector<double> block_probabilities;  // index n - 1

  double bracket_width() const noexcept { return sum_upper - sum_lower; }
};

BorelCantelliReport borel_cantelli_diagnostic(const ProcessSpec& spec, double epsilon);

/// Disjoint cover of {1..nmax, inf}.
class Partition {
 public:
  static Partition singletons(std::uint64_t nmax);
  /// {1}, {2,3}, {4..7}, ... and {inf}.
  static Partition dyadic(std::uint64_t nmax);
  static Partition single_cell(std::uint64_t nmax);
  /// Throws ParameterError unless the cells cover {1..nmax, inf} disjointly.
  static Partition from_cells(std::uint64_t nmax, const std::vector<std::vector<TPoint>>& cells);

  std::uint64_t nmax() const noexcept { return nmax_; }
  std::size_t cells() const noexcept { return sizes_.size(); }
  std::size_t cell_of(TPoint t) const;
  std::size_t cell_size(std::size_t cell) const { return sizes_.at(cell); }

 private:
  std::uint64_t nmax_ = 0;
  std::vector<std::uint32_t> cell_of_;  // index n, with the point at infinity at index 0
  std::vector<std::size_t> sizes_;
};

struct UnionBoundReport {
  double u = 0.0;
  std::size_t cells = 0;
  TailEstimate lhs;        // P(sup_T kappa > u)
  double rhs = 0.0;        // sum_k P(sup_{T_k} kappa > u)
  double rhs_error = 0.0;
  double slack = 0.0;      // rhs - lhs on shared draws
  double slack_error = 0.0;
  std::optional<double> exact_lhs;

  /// lhs <= rhs + sigmas * combined standard error.
  bool holds(double sigmas = 4.0) const noexcept;
};

UnionBoundReport union_bound_check(const CounterexampleProcess& process, const Partition& partition,
                                   double u, const SampleBatch& batch);

struct SignedMeanEstimate {
  std::uint64_t n = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  std::size_t hits = 0;  // draws landing in the support of block n
};

/// Mean of eps g_n(x) over independent (eps, x) pairs from the batch; the
/// batch must carry signs.
SignedMeanEstimate symmetrized_mean(const ProcessSpec& spec, std::uint64_t n,
                                    const SampleBatch& batch);

struct EventualSmallnessRow {
  std::uint64_t n = 0;
  TailEstimate estimate;  // fraction of x with |g_m(x)| > eps for some m > n
};

/// Almost-sure convergence proxy at the given truncation points.
std::vector<EventualSmallnessRow> eventual_smallness(const ProcessSpec& spec, double epsilon,
                                                     const std::vector<std::uint64_t>& checkpoints,
                                                     const SampleBatch& batch);

}  // namespace glslab
