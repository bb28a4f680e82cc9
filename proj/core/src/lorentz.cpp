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

#include <algorithm>
#include <cmath>

#include "glslab/errors.hpp"
#include "glslab/norms.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketCeiling = 1e300;

bool unbounded(const UnitIntervalFunction& f) {
  return std::any_of(f.pieces().begin(), f.pieces().end(), [](const Piece& p) {
    return p.kernel.singular_at_zero() || p.kernel.singular_at_one();
  });
}

}  // namespace

double rearranged_at_log(const UnitIntervalFunction& f, double log_s) {
  if (log_s > 0.0) throw ParameterError("rearrangement argument must lie in (0,1]");
  if (log_distribution_function(f, 0.0) <= log_s) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (log_distribution_function(f, hi) > log_s) {
    lo = hi;
    hi *= 2.0;
    if (hi > kBracketCeiling) {
      throw Error("rearrangement inversion fails to bracket at log s = " + std::to_string(log_s));
    }
  }
  for (int i = 0; i < 200 && hi - lo > 4e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_distribution_function(f, mid) <= log_s ? hi : lo) = mid;
  }
  return hi;
}

double rearranged(const UnitIntervalFunction& f, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ParameterError("rearrangement argument must lie in (0,1]");
  return rearranged_at_log(f, std::log(s));
}

UnitIntervalFunction decreasing_rearrangement(const UnitIntervalFunction& f) {
  auto kernel = Kernel::custom(
      "rearrangement", [f](double s) { return rearranged(f, s); }, unbounded(f), false,
      Monotonicity::kDecreasing);
  return UnitIntervalFunction::from_kernel(std::move(kernel));
}

LorentzWeight::LorentzWeight(std::string name, Evaluator eval, Evaluator log_eval)
    : name_(std::move(name)), eval_(std::move(eval)), log_eval_(std::move(log_eval)) {
  if (!log_eval_) {
    log_eval_ = [ev = eval_](double log_t) { return std::log(ev(std::exp(log_t))); };
  }
  double prev = eval_(1e-12);
  if (!(prev >= 0.0) || !(prev <= 1e-2 * eval_(1.0))) {
    throw ParameterError("Lorentz weight must vanish at 0+: " + name_);
  }
  for (int i = 1; i <= 64; ++i) {
    const double t = i / 64.0;
    const double v = eval_(t);
    if (!(v > prev)) throw ParameterError("Lorentz weight must be strictly increasing: " + name_);
    prev = v;
  }
}

LorentzWeight LorentzWeight::power(double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("Lorentz power weight needs alpha > 0");
  return LorentzWeight(
      "power", [alpha](double t) { return std::pow(t, alpha); },
      [alpha](double log_t) { return alpha * log_t; });
}

LorentzWeight LorentzWeight::custom(std::string name, Evaluator eval, Evaluator log_eval) {
  if (!eval) throw ParameterError("custom Lorentz weight needs an evaluator");
  return LorentzWeight(std::move(name), std::move(eval), std::move(log_eval));
}

LorentzGrid LorentzGrid::standard(std::size_t points, double tau_min, double tau_max) {
  if (points < 2 || !(tau_min > 0.0) || !(tau_max > tau_min)) {
    throw ParameterError("Lorentz grid needs >= 2 points and 0 < tau_min < tau_max");
  }
  LorentzGrid grid;
  grid.log_t.push_back(0.0);
  const std::size_t n = points - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    grid.log_t.push_back(-tau_min * std::pow(tau_max / tau_min, frac));
  }
  return grid;
}

LorentzGrid LorentzGrid::from_values(const std::vector<double>& t) {
  LorentzGrid grid;
  for (double v : t) {
    if (!(v > 0.0 && v <= 1.0)) throw ParameterError("Lorentz grid values must lie in (0,1]");
    grid.log_t.push_back(std::log(v));
  }
  std::sort(grid.log_t.begin(), grid.log_t.end(), std::greater<>());
  return grid;
}

QuadratureOutcome rearranged_mean(const UnitIntervalFunction& f, double log_t,
                                  const QuadratureConfig& cfg) {
  // (1/t) int_0^t f*(s) ds = int_0^inf f*(t e^-sigma) e^-sigma dsigma, sigma = u / (1 - u).
  auto integrand = [&f, log_t](double u) {
    const double one_minus = 1.0 - u;
    const double sigma = u / one_minus;
    const double weight = std::exp(-sigma);
    if (weight == 0.0) return 0.0;
    return rearranged_at_log(f, log_t - sigma) * weight / (one_minus * one_minus);
  };
  return integrate_interval(integrand, 0.0, 1.0, cfg);
}

NormReport lorentz_norm(const UnitIntervalFunction& f, const LorentzWeight& v,
                        const LorentzGrid& grid, const QuadratureConfig& cfg,
                        const DivergenceCriterion& c) {
  if (grid.log_t.empty()) throw ParameterError("Lorentz grid is empty");
  NormReport report;
  report.method = NormMethod::kLorentz;
  if (f.empty()) {
    report.argmax = 1.0;
    return report;
  }

  std::vector<Witness> scan;
  scan.reserve(grid.log_t.size());
  std::size_t best = 0;
  double best_error = 0.0;
  for (std::size_t i = 0; i < grid.log_t.size(); ++i) {
    const double log_t = grid.log_t[i];
    const QuadratureOutcome mean = rearranged_mean(f, log_t, cfg);
    if (!mean.ok()) {
      throw QuadratureError("rearranged mean did not converge", mean.value, mean.error);
    }
    const double scale = std::exp(log_t - v.log_at(log_t));
    const double value = mean.value > 0.0 ? std::exp(log_t - v.log_at(log_t) + std::log(mean.value))
                                          : 0.0;
    scan.push_back({log_t, value});
    if (value > scan[best].value * (1.0 + 1e-12)) {
      best = i;
      best_error = mean.error * scale;
    } else if (i == 0) {
      best_error = mean.error * scale;
    }
  }
  if (certifies_divergence(scan, c)) {
    const double where = std::exp(scan.back().parameter);
    return NormReport::make_divergent(NormMethod::kLorentz, std::move(scan), where);
  }
  report.value = scan[best].value;
  report.error = best_error;
  report.argmax = std::exp(scan[best].parameter);
  report.witness = std::move(scan);
  return report;
}

}  // namespace glslab
