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

#include "glslab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "glslab/errors.hpp"
#include "record_util.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kWitnessSteps = 128;

// Witnesses for a divergent Lp integral: the substituted variable t is
// truncated at 2^k until the criterion is met, and each truncated integral is
// converted to the norm scale.
std::vector<Witness> truncation_witness(const UnitIntervalFunction& f, double p,
                                        const QuadratureConfig& cfg) {
  std::vector<Witness> witness;
  auto outer = [p](double v) { return std::pow(std::fabs(v), p); };
  auto log_outer = [p](double log_v) { return p * log_v; };
  for (int k = 1; k <= kWitnessSteps; ++k) {
    const double t_max = std::exp2(k);
    const QuadratureOutcome part = try_integrate(f, outer, log_outer, cfg, t_max);
    witness.push_back({t_max, part.ok() ? std::pow(part.value, 1.0 / p) : kInf});
    if (!part.ok() || certifies_divergence(witness)) break;
  }
  return witness;
}

}  // namespace

std::string to_string(NormMethod method) {
  switch (method) {
    case NormMethod::kLebesgue: return "lebesgue";
    case NormMethod::kGrandLebesgue: return "grand-lebesgue";
    case NormMethod::kLuxemburg: return "luxemburg";
    case NormMethod::kLorentz: return "lorentz";
    case NormMethod::kSeries: return "series";
    case NormMethod::kClosedForm: return "closed-form";
  }
  return "unknown";
}

NormReport NormReport::make_divergent(NormMethod method, std::vector<Witness> witness,
                                      std::optional<double> where) {
  NormReport report;
  report.value = kInf;
  report.divergent = true;
  report.method = method;
  report.error = 0.0;
  report.argmax = where;
  report.witness = std::move(witness);
  return report;
}

bool certifies_divergence(const std::vector<Witness>& witness, const DivergenceCriterion& c) {
  if (witness.size() < c.monotone_window || c.monotone_window == 0) return false;
  const std::size_t start = witness.size() - c.monotone_window;
  for (std::size_t i = start + 1; i < witness.size(); ++i) {
    if (!(witness[i].value > witness[i - 1].value)) return false;
  }
  return witness.back().value > c.threshold;
}

NormReport lp_norm(const UnitIntervalFunction& f, double p, const QuadratureConfig& cfg) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("lp_norm needs 1 <= p < inf");
  NormReport report;
  report.method = NormMethod::kLebesgue;
  report.argmax = p;
  if (f.empty()) return report;

  auto outer = [p](double v) { return std::pow(std::fabs(v), p); };
  auto log_outer = [p](double log_v) { return p * log_v; };
  const QuadratureOutcome out = try_integrate(f, outer, log_outer, cfg);
  if (out.ok()) {
    report.value = std::pow(out.value, 1.0 / p);
    report.error = out.value > 0.0 ? report.value * out.error / (p * out.value)
                                   : std::pow(out.error, 1.0 / p);
    return report;
  }
  if (out.status == QuadratureStatus::kNonFinite) {
    return NormReport::make_divergent(NormMethod::kLebesgue, truncation_witness(f, p, cfg), p);
  }
  auto witness = truncation_witness(f, p, cfg);
  if (certifies_divergence(witness)) {
    return NormReport::make_divergent(NormMethod::kLebesgue, std::move(witness), p);
  }
  throw QuadratureError("Lp integral did not converge at p = " + detail::shortest(p),
                        out.value, out.error);
}

std::vector<double> gls_scan_grid(const PsiFunction& psi, const GlsOptions& opts) {
  if (psi.family() == PsiFamily::kDegenerate) return {psi.degenerate_point()};
  const std::size_t n = std::max<std::size_t>(opts.grid_points, 2);
  const double a = psi.lower();
  std::vector<double> grid(n);
  if (!std::isfinite(psi.upper())) {
    const double top = std::max(opts.p_cap, a);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = a * std::pow(top / a, static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return grid;
  }
  const double b = psi.upper();
  if (psi.right_open()) {
    const double ratio = std::pow(opts.endpoint_gap, 1.0 / static_cast<double>(n - 1));
    double gap = b - a;
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = b - gap;
      gap *= ratio;
    }
    return grid;
  }
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(n - 1));
  }
  grid.back() = b;
  return grid;
}

NormReport gls_norm(const UnitIntervalFunction& f, const PsiFunction& psi, const GlsOptions& opts,
                    const QuadratureConfig& cfg) {
  if (psi.family() == PsiFamily::kDegenerate) {
    NormReport report = lp_norm(f, psi.degenerate_point(), cfg);
    report.method = NormMethod::kGrandLebesgue;
    return report;
  }

  const std::vector<double> grid = gls_scan_grid(psi, opts);
  std::vector<Witness> scan;
  scan.reserve(grid.size());
  std::vector<double> errors;
  for (double p : grid) {
    const double weight = psi(p);
    if (std::isinf(weight)) {
      scan.push_back({p, 0.0});
      errors.push_back(0.0);
      continue;
    }
    const NormReport lp = lp_norm(f, p, cfg);
    if (lp.divergent) {
      scan.push_back({p, kInf});
      return NormReport::make_divergent(NormMethod::kGrandLebesgue, std::move(scan), p);
    }
    scan.push_back({p, lp.value / weight});
    errors.push_back(lp.error / weight);
  }
  if (certifies_divergence(scan, opts.divergence)) {
    const double where = scan.back().parameter;
    return NormReport::make_divergent(NormMethod::kGrandLebesgue, std::move(scan), where);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].value > scan[best].value) best = i;
  }

  NormReport report;
  report.method = NormMethod::kGrandLebesgue;
  report.value = scan[best].value;
  report.error = errors[best];
  report.argmax = scan[best].parameter;
  report.witness = scan;

  // Golden-section refinement between the neighbours of the best grid point.
  if (grid.size() >= 3) {
    double lo = grid[best == 0 ? 0 : best - 1];
    double hi = grid[std::min(best + 1, grid.size() - 1)];
    auto ratio = [&](double p) {
      const double weight = psi(p);
      if (std::isinf(weight)) return 0.0;
      const NormReport lp = lp_norm(f, p, cfg);
      return lp.divergent ? kInf : lp.value / weight;
    };
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = ratio(x1);
    double f2 = ratio(x2);
    for (int it = 0; it < opts.golden_iterations && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = ratio(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = ratio(x2);
      }
    }
    const double x = f1 >= f2 ? x1 : x2;
    const double fx = std::max(f1, f2);
    if (fx > report.value * (1.0 + 1e-12)) {
      report.value = fx;
      report.argmax = x;
    }
  }
  return report;
}

QuadratureOutcome luxemburg_modular(const UnitIntervalFunction& f, const YoungFunction& Phi,
                                    double k, const QuadratureConfig& cfg) {
  if (!(k > 0.0)) throw ParameterError("Luxemburg scale k must be positive");
  return try_integrate(
      f, [&Phi, k](double v) { return Phi(v / k); },
      [&Phi, k](double log_v) { return Phi.log_value(std::exp(log_v) / k); }, cfg);
}

NormReport luxemburg_norm(const UnitIntervalFunction& f, const YoungFunction& Phi,
                          const QuadratureConfig& cfg, const LuxemburgOptions& opts) {
  NormReport report;
  report.method = NormMethod::kLuxemburg;
  const NormReport l1 = lp_norm(f, 1.0, cfg);
  if (l1.finite() && l1.value == 0.0) {
    report.argmax = 0.0;
    return report;
  }

  auto modular = [&](double k) {
    const QuadratureOutcome out = luxemburg_modular(f, Phi, k, cfg);
    return out.ok() ? out.value : kInf;
  };
  std::vector<Witness> trail;
  double k0 = l1.finite() ? l1.value : 1.0;
  double lo = 0.0;
  double hi = 0.0;
  const double m0 = modular(k0);
  trail.push_back({k0, m0});
  if (m0 <= 1.0) {
    hi = k0;
    lo = k0;
    for (int i = 0; i < opts.max_expansions; ++i) {
      lo *= 0.5;
      const double m = modular(lo);
      if (m > 1.0) break;
      hi = lo;
      if (i + 1 == opts.max_expansions) {
        report.value = 0.0;
        report.argmax = 0.0;
        return report;
      }
    }
  } else {
    lo = k0;
    hi = k0;
    bool bracketed = false;
    for (int i = 0; i < opts.max_expansions; ++i) {
      hi *= 2.0;
      const double m = modular(hi);
      trail.push_back({hi, m});
      if (m <= 1.0) {
        bracketed = true;
        break;
      }
      lo = hi;
    }
    if (!bracketed) return NormReport::make_divergent(NormMethod::kLuxemburg, std::move(trail));
  }

  while (hi - lo > opts.rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (modular(mid) <= 1.0 ? hi : lo) = mid;
  }
  report.value = hi;
  report.error = hi - lo;
  report.argmax = hi;
  return report;
}

double log_distribution_function(const UnitIntervalFunction& f, double lambda) {
  if (lambda < 0.0) {
    // Every point exceeds a negative level.
    return 0.0;
  }
  double peak = -kInf;
  std::vector<double> logs;
  logs.reserve(f.pieces().size());
  for (const auto& piece : f.pieces()) {
    const double l = std::log(piece.mass) + piece.kernel.log_level_measure(piece.amplitude, lambda);
    logs.push_back(l);
    peak = std::max(peak, l);
  }
  if (peak == -kInf) return -kInf;
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - peak);
  return std::min(0.0, peak + std::log(sum));
}

double distribution_function(const UnitIntervalFunction& f, double lambda) {
  if (!(lambda >= 0.0)) throw ParameterError("distribution_function needs lambda >= 0");
  double total = 0.0;
  for (const auto& piece : f.pieces()) {
    total += piece.mass * piece.kernel.level_measure(piece.amplitude, lambda);
  }
  return std::min(1.0, total);
}

}  // namespace glslab
