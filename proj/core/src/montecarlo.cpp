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

#include "glslab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glslab/errors.hpp"
#include "glslab/norms.hpp"
#include "glslab/random.hpp"
#include "glslab/series.hpp"

namespace glslab {

namespace {

void require_nonempty(const SampleBatch& batch) {
  if (batch.count() == 0) throw ParameterError("sample batch is empty");
}

void require_increasing(const std::vector<double>& ugrid) {
  for (std::size_t i = 1; i < ugrid.size(); ++i) {
    if (!(ugrid[i] > ugrid[i - 1])) throw ParameterError("u-grid must be strictly increasing");
  }
}

// P(|g_n| > u) from the profile pieces, without materializing the block.
double block_exceedance(const ProcessSpec& spec, std::uint64_t n, double u) {
  const double c = spec.c(n);
  double total = 0.0;
  for (const auto& piece : spec.profile().pieces()) {
    total += piece.mass * piece.kernel.level_measure(c * piece.amplitude, u);
  }
  return spec.delta(n) * total;
}

double process_value(const CounterexampleProcess& process, std::uint64_t n, double x) {
  return n == 0 ? 0.0 : process.theta(TPoint::at(n), x);
}

std::vector<TailEstimate> count_exceedances(std::vector<double> values,
                                            const std::vector<double>& ugrid) {
  std::sort(values.begin(), values.end());
  std::vector<TailEstimate> out;
  out.reserve(ugrid.size());
  for (double u : ugrid) {
    const auto above = values.end() - std::upper_bound(values.begin(), values.end(), u);
    out.push_back(make_tail_estimate(u, static_cast<std::size_t>(above), values.size()));
  }
  return out;
}

}  // namespace

SampleBatch SampleBatch::draw(std::uint64_t seed, std::size_t count, bool with_signs) {
  if (count < 1) throw ParameterError("sample count must be at least 1");
  SampleBatch batch;
  batch.seed_ = seed;
  RandomStream xs(derive_seed(seed, 0));
  batch.xs_.resize(count);
  for (auto& x : batch.xs_) x = xs.uniform();
  if (with_signs) {
    RandomStream signs(derive_seed(seed, 1));
    batch.signs_.resize(count);
    for (auto& s : batch.signs_) s = static_cast<std::int8_t>(signs.rademacher());
  }
  return batch;
}

double RunningMoments::standard_error() const noexcept {
  return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
}

std::optional<double> TailEstimate::z_score() const {
  if (!exact) return std::nullopt;
  const double diff = std::fabs(estimate - *exact);
  if (std_error == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / std_error;
}

TailEstimate make_tail_estimate(double threshold, std::size_t exceed, std::size_t count) {
  if (count == 0) throw ParameterError("tail estimate needs at least one draw");
  TailEstimate t;
  t.threshold = threshold;
  t.count = count;
  t.estimate = static_cast<double>(exceed) / static_cast<double>(count);
  t.std_error = std::sqrt(t.estimate * (1.0 - t.estimate) / static_cast<double>(count));
  return t;
}

MomentEstimate estimate_lp(const UnitIntervalFunction& g, double p, const SampleBatch& batch) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("estimate_lp needs finite p >= 1");
  require_nonempty(batch);
  RunningMoments moments;
  for (double x : batch.xs()) moments.add(std::pow(std::fabs(g(x)), p));
  MomentEstimate out;
  out.p = p;
  out.count = moments.count();
  out.mean_power = moments.mean();
  out.mean_power_error = moments.standard_error();
  out.estimate = std::pow(out.mean_power, 1.0 / p);
  out.std_error = out.mean_power > 0.0
                      ? out.estimate / (p * out.mean_power) * out.mean_power_error
                      : 0.0;
  return out;
}

std::vector<TailEstimate> tail_curve(const UnitIntervalFunction& g, const std::vector<double>& ugrid,
                                     const SampleBatch& batch) {
  require_nonempty(batch);
  require_increasing(ugrid);
  std::vector<double> values;
  values.reserve(batch.count());
  for (double x : batch.xs()) values.push_back(std::fabs(g(x)));
  return count_exceedances(std::move(values), ugrid);
}

double exact_sup_tail(const CounterexampleProcess& process, double u) {
  // theta(inf) = 0 puts every x above a negative level.
  if (u < 0.0) return 1.0;
  if (!process.is_symmetrized()) return distribution_function(process.envelope(), u);
  const ProcessSpec& spec = process.spec();
  CompensatedSum total;
  for (std::uint64_t n = 1; n <= spec.nmax(); ++n) {
    if (process.sign(n) > 0) total.add(block_exceedance(spec, n, u));
  }
  return std::min(1.0, total.value());
}

std::vector<TailEstimate> tail_curve(const CounterexampleProcess& process,
                                     const std::vector<double>& ugrid, const SampleBatch& batch) {
  require_nonempty(batch);
  require_increasing(ugrid);
  std::vector<double> values;
  values.reserve(batch.count());
  for (double x : batch.xs()) {
    values.push_back(std::max(0.0, process_value(process, process.locate(x), x)));
  }
  auto out = count_exceedances(std::move(values), ugrid);
  for (auto& t : out) t.exact = exact_sup_tail(process, t.threshold);
  return out;
}

BorelCantelliReport borel_cantelli_diagnostic(const ProcessSpec& spec, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  BorelCantelliReport report;
  report.epsilon = epsilon;
  const std::uint64_t nmax = spec.nmax();
  report.block_probabilities.resize(nmax);

  const NormReport nu1 = spec.nu(1.0);
  const double beta = spec.beta();
  const double markov_scale = spec.normalization() * nu1.value / epsilon;

  CompensatedSum partial;
  CompensatedSum bound;
  report.partial_sums_monotone = true;
  report.bound_holds = true;
  std::uint64_t next_checkpoint = 1;
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    const double prob = block_exceedance(spec, n, epsilon);
    report.block_probabilities[n - 1] = prob;
    const double before = partial.value();
    partial.add(prob);
    bound.add(markov_scale * std::exp((-3.0 * beta - 1.0) * spec.log_n(n)));
    if (partial.value() < before) report.partial_sums_monotone = false;
    if (partial.value() > bound.value() * (1.0 + 1e-12)) report.bound_holds = false;
    if (n == next_checkpoint || n == nmax) {
      report.checkpoints.push_back({n, partial.value(), spec.a(n + 1), bound.value()});
      while (next_checkpoint <= n) next_checkpoint *= 10;
    }
  }
  report.sum_lower = partial.value();
  report.sum_upper = partial.value() + spec.a(nmax + 1);

  const SeriesBracket zeta = zeta_bracket(3.0 * beta, nmax, spec.log_table());
  report.markov_bound = spec.normalization_upper() * (nu1.value + nu1.error) * zeta.upper / epsilon;
  if (report.sum_upper > report.markov_bound) report.bound_holds = false;
  return report;
}

Partition Partition::singletons(std::uint64_t nmax) {
  Partition p;
  p.nmax_ = nmax;
  p.cell_of_.resize(nmax + 1);
  p.sizes_.assign(nmax + 1, 1);
  for (std::uint64_t n = 1; n <= nmax; ++n) p.cell_of_[n] = static_cast<std::uint32_t>(n - 1);
  p.cell_of_[0] = static_cast<std::uint32_t>(nmax);
  return p;
}

Partition Partition::dyadic(std::uint64_t nmax) {
  Partition p;
  p.nmax_ = nmax;
  p.cell_of_.resize(nmax + 1);
  std::uint32_t cell = 0;
  for (std::uint64_t start = 1; start <= nmax; start *= 2, ++cell) {
    const std::uint64_t stop = std::min(nmax, 2 * start - 1);
    for (std::uint64_t n = start; n <= stop; ++n) p.cell_of_[n] = cell;
    p.sizes_.push_back(stop - start + 1);
  }
  p.cell_of_[0] = cell;
  p.sizes_.push_back(1);
  return p;
}

Partition Partition::single_cell(std::uint64_t nmax) {
  Partition p;
  p.nmax_ = nmax;
  p.cell_of_.assign(nmax + 1, 0);
  p.sizes_.assign(1, nmax + 1);
  return p;
}

Partition Partition::from_cells(std::uint64_t nmax,
                                const std::vector<std::vector<TPoint>>& cells) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  Partition p;
  p.nmax_ = nmax;
  p.cell_of_.assign(nmax + 1, kUnset);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].empty()) throw ParameterError("partition cells must be non-empty");
    for (TPoint t : cells[k]) {
      if (t.index() > nmax) throw ParameterError("partition point " + t.to_string() + " beyond nmax");
      auto& slot = p.cell_of_[t.index()];
      if (slot != kUnset) throw ParameterError("partition point " + t.to_string() + " in two cells");
      slot = static_cast<std::uint32_t>(k);
    }
    p.sizes_.push_back(cells[k].size());
  }
  for (std::uint64_t i = 0; i <= nmax; ++i) {
    if (p.cell_of_[i] == kUnset) {
      throw ParameterError("partition does not cover point " +
                           (i == 0 ? std::string("inf") : std::to_string(i)));
    }
  }
  return p;
}

std::size_t Partition::cell_of(TPoint t) const {
  if (t.index() > nmax_) throw ParameterError("point beyond the partitioned truncation");
  return cell_of_[t.index()];
}

bool UnionBoundReport::holds(double sigmas) const noexcept {
  return lhs.estimate <= rhs + sigmas * slack_error;
}

UnionBoundReport union_bound_check(const CounterexampleProcess& process, const Partition& partition,
                                   double u, const SampleBatch& batch) {
  require_nonempty(batch);
  if (partition.nmax() != process.spec().nmax()) {
    throw ParameterError("partition truncation differs from the process truncation");
  }
  // Per-draw counts are integers, so the sums below are exact.
  const std::uint64_t others = u < 0.0 ? partition.cells() - 1 : 0;
  std::uint64_t lhs_hits = 0;
  double rhs_sum = 0.0, rhs_sq = 0.0, slack_sum = 0.0, slack_sq = 0.0;
  for (double x : batch.xs()) {
    const std::uint64_t n = process.locate(x);
    const double v = process_value(process, n, x);
    const std::uint64_t lhs_i = std::max(v, 0.0) > u ? 1 : 0;
    std::uint64_t count;
    if (n == 0) {
      count = u < 0.0 ? partition.cells() : 0;
    } else {
      // Every other point of x's cell is 0 at x, and so is every other cell.
      const std::size_t cell = partition.cell_of(TPoint::at(n));
      const double cell_sup = partition.cell_size(cell) > 1 ? std::max(v, 0.0) : v;
      count = (cell_sup > u ? 1 : 0) + others;
    }
    lhs_hits += lhs_i;
    const auto c = static_cast<double>(count);
    const auto d = static_cast<double>(count - lhs_i);
    rhs_sum += c;
    rhs_sq += c * c;
    slack_sum += d;
    slack_sq += d * d;
  }
  const auto draws = static_cast<double>(batch.count());
  auto std_error = [draws](double sum, double sq) {
    if (draws < 2.0) return 0.0;
    const double var = std::max(0.0, (sq - sum * sum / draws) / (draws - 1.0));
    return std::sqrt(var / draws);
  };
  UnionBoundReport report;
  report.u = u;
  report.cells = partition.cells();
  report.lhs = make_tail_estimate(u, lhs_hits, batch.count());
  report.rhs = rhs_sum / draws;
  report.rhs_error = std_error(rhs_sum, rhs_sq);
  report.slack = slack_sum / draws;
  report.slack_error = std_error(slack_sum, slack_sq);
  report.exact_lhs = exact_sup_tail(process, u);
  report.lhs.exact = report.exact_lhs;
  return report;
}

SignedMeanEstimate symmetrized_mean(const ProcessSpec& spec, std::uint64_t n,
                                    const SampleBatch& batch) {
  require_nonempty(batch);
  if (batch.signs().size() != batch.count()) {
    throw ParameterError("symmetrized mean needs a batch drawn with signs");
  }
  const UnitIntervalFunction g = block(spec, n);
  RunningMoments moments;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < batch.count(); ++i) {
    const double x = batch.xs()[i];
    const double v = g(x);
    if (x >= spec.a(n + 1) && x < spec.a(n)) ++hits;
    moments.add(batch.signs()[i] * v);
  }
  SignedMeanEstimate out;
  out.n = n;
  out.mean = moments.mean();
  out.std_error = moments.standard_error();
  out.count = moments.count();
  out.hits = hits;
  return out;
}

std::vector<EventualSmallnessRow> eventual_smallness(const ProcessSpec& spec, double epsilon,
                                                     const std::vector<std::uint64_t>& checkpoints,
                                                     const SampleBatch& batch) {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  require_nonempty(batch);
  const std::uint64_t nmax = spec.nmax();
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] > nmax) throw ParameterError("checkpoint beyond nmax");
    if (i > 0 && !(checkpoints[i] > checkpoints[i - 1])) {
      throw ParameterError("checkpoints must be strictly increasing");
    }
  }
  // Exact tails from the smallest blocks upward.
  std::vector<double> suffix(nmax + 2, 0.0);
  CompensatedSum running;
  for (std::uint64_t n = nmax; n >= 1; --n) {
    running.add(block_exceedance(spec, n, epsilon));
    suffix[n] = running.value();
  }
  // Index of the exceeding block for each draw, 0 if none.
  const CounterexampleProcess process(spec);
  std::vector<std::uint64_t> exceeding;
  exceeding.reserve(batch.count());
  for (double x : batch.xs()) {
    const std::uint64_t n = process.locate(x);
    exceeding.push_back(n != 0 && std::fabs(process.theta(TPoint::at(n), x)) > epsilon ? n : 0);
  }
  std::vector<EventualSmallnessRow> rows;
  for (std::uint64_t cut : checkpoints) {
    const auto hits = std::count_if(exceeding.begin(), exceeding.end(),
                                    [cut](std::uint64_t n) { return n > cut; });
    EventualSmallnessRow row;
    row.n = cut;
    row.estimate = make_tail_estimate(epsilon, static_cast<std::size_t>(hits), batch.count());
    row.estimate.exact = suffix[cut + 1];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace glslab
