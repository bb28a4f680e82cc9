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

#include "glslab/psi.hpp"

#include <algorithm>
#include <cmath>

#include "glslab/errors.hpp"
#include "glslab/norms.hpp"
#include "record_util.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kPositivitySamples = 64;

void require_positive_on_support(const PsiFunction& psi) {
  const double a = psi.lower();
  const double b = std::isfinite(psi.upper()) ? psi.upper() : a + 100.0;
  for (std::size_t i = 0; i < kPositivitySamples; ++i) {
    double p = a + (b - a) * static_cast<double>(i) / static_cast<double>(kPositivitySamples);
    if (!psi.in_support(p)) continue;
    if (!(psi(p) > 0.0)) {
      throw ParameterError("psi-function must be strictly positive on its support (p = " +
                           detail::shortest(p) + ")");
    }
  }
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

}  // namespace

std::string to_string(PsiFamily family) {
  switch (family) {
    case PsiFamily::kNatural: return "natural";
    case PsiFamily::kPowerSingular: return "power-singular";
    case PsiFamily::kDegenerate: return "degenerate";
    case PsiFamily::kConstant: return "constant";
    case PsiFamily::kMomentPower: return "moment-power";
    case PsiFamily::kCustom: return "custom";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kWeaker: return "weaker";
    case Verdict::kNotWeaker: return "not-weaker";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

PsiFunction::PsiFunction(PsiFamily family, double a, double b, bool right_open, Evaluator eval,
                         Evaluator gap_eval)
    : family_(family),
      a_(a),
      b_(b),
      right_open_(right_open),
      eval_(std::move(eval)),
      gap_eval_(std::move(gap_eval)) {
  if (!(a >= 1.0) || !(a <= b) || (a == b && right_open)) {
    throw ParameterError("psi support must satisfy 1 <= a < b (or a single point)");
  }
}

PsiFunction PsiFunction::power_singular(double beta, double b) {
  if (!(beta >= 0.0)) throw ParameterError("power-singular psi needs beta >= 0");
  if (!(b > 1.0) || !std::isfinite(b)) throw ParameterError("power-singular psi needs 1 < b < inf");
  PsiFunction psi(
      PsiFamily::kPowerSingular, 1.0, b, true,
      [beta, b](double p) { return std::pow(b - p, -beta); },
      [beta](double gap) { return std::pow(gap, -beta); });
  psi.beta_ = beta;
  return psi;
}

PsiFunction PsiFunction::degenerate(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw ParameterError("degenerate psi needs r >= 1");
  PsiFunction psi(PsiFamily::kDegenerate, r, r, false, [](double) { return 1.0; }, {});
  psi.r_ = r;
  return psi;
}

PsiFunction PsiFunction::constant(double value, double a, double b) {
  if (!(value > 0.0)) throw ParameterError("constant psi must be positive");
  PsiFunction psi(PsiFamily::kConstant, a, b, !std::isfinite(b),
                  [value](double) { return value; }, [value](double) { return value; });
  psi.constant_ = value;
  return psi;
}

PsiFunction PsiFunction::moment_power(double gamma, double a, double b) {
  if (!(gamma >= 0.0)) throw ParameterError("moment-power psi needs gamma >= 0");
  PsiFunction psi(PsiFamily::kMomentPower, a, b, !std::isfinite(b),
                  [gamma](double p) { return std::pow(p, gamma); }, {});
  psi.gamma_ = gamma;
  return psi;
}

PsiFunction PsiFunction::custom(std::string name, Evaluator eval, double a, double b,
                                bool right_open) {
  if (!eval) throw ParameterError("custom psi needs an evaluator");
  PsiFunction psi(PsiFamily::kCustom, a, b, right_open || !std::isfinite(b), std::move(eval), {});
  psi.name_ = std::move(name);
  require_positive_on_support(psi);
  return psi;
}

PsiFunction PsiFunction::from_record(const std::string& record) {
  const auto parts = detail::split(record, ':');
  if (parts.empty()) throw ParameterError("empty psi record");
  auto num = [&](std::size_t i) { return detail::parse_double(parts[i], record); };
  const std::string& tag = parts[0];
  if (tag == "power-singular" && parts.size() == 3) return power_singular(num(1), num(2));
  if (tag == "degenerate" && parts.size() == 2) return degenerate(num(1));
  if (tag == "constant" && parts.size() == 4) return constant(num(1), num(2), num(3));
  if (tag == "moment-power" && parts.size() == 2) return moment_power(num(1));
  if (tag == "moment-power" && parts.size() == 4) return moment_power(num(1), num(2), num(3));
  throw ParameterError("unknown psi record '" + record + "'");
}

std::string PsiFunction::to_record() const {
  using detail::shortest;
  switch (family_) {
    case PsiFamily::kPowerSingular:
      return "power-singular:" + shortest(beta_) + ":" + shortest(b_);
    case PsiFamily::kDegenerate:
      return "degenerate:" + shortest(r_);
    case PsiFamily::kConstant:
      return "constant:" + shortest(constant_) + ":" + shortest(a_) + ":" + shortest(b_);
    case PsiFamily::kMomentPower:
      return "moment-power:" + shortest(gamma_) + ":" + shortest(a_) + ":" + shortest(b_);
    case PsiFamily::kNatural:
      return "natural:" + shortest(b_);
    case PsiFamily::kCustom:
      break;
  }
  return "custom:" + name_;
}

bool PsiFunction::in_support(double p) const noexcept {
  if (!(p >= a_)) return false;
  return right_open_ ? p < b_ : p <= b_;
}

double PsiFunction::operator()(double p) const { return in_support(p) ? eval_(p) : kInf; }

bool PsiFunction::in_support_gap(double gap) const noexcept {
  if (!std::isfinite(b_)) return false;
  return right_open_ ? (gap > 0.0 && gap <= b_ - a_) : (gap >= 0.0 && gap <= b_ - a_);
}

double PsiFunction::at_gap(double gap) const {
  if (!in_support_gap(gap)) return kInf;
  if (gap_eval_) return gap_eval_(gap);
  return eval_(b_ - gap);
}

PsiFunction make_natural_psi(const UnitIntervalFunction& f, double pmax,
                             const QuadratureConfig& cfg) {
  if (!(pmax >= 1.0) || !std::isfinite(pmax)) throw ParameterError("natural psi needs 1 <= pmax < inf");
  const NormReport top = lp_norm(f, pmax, cfg);
  if (top.divergent) {
    throw DivergenceError("|f|_p diverges at p = " + detail::shortest(pmax) +
                          "; no natural function on [1, pmax]");
  }
  if (!(lp_norm(f, 1.0, cfg).value > 0.0)) {
    throw ParameterError("natural psi of the zero function is not a psi-function");
  }
  PsiFunction psi(
      PsiFamily::kNatural, 1.0, pmax, false,
      [f, cfg](double p) { return lp_norm(f, p, cfg).value; }, {});
  return psi;
}

GapGrid GapGrid::toward(double a, double b, int k_last) {
  if (!std::isfinite(b) || !(b > a)) throw ParameterError("gap grid needs a finite b > a");
  GapGrid grid;
  grid.b = b;
  for (int k = 0; k <= k_last; ++k) {
    const double gap = std::ldexp(b, -k);
    if (gap == 0.0) break;
    if (b - gap >= a) grid.gaps.push_back(gap);
  }
  return grid;
}

WeakerReport gls_weaker(const PsiFunction& phi, const PsiFunction& psi, const GapGrid& grid,
                        const LimitCriterion& criterion) {
  if (phi.upper() != psi.upper() || grid.b != psi.upper()) {
    throw ParameterError("gls_weaker needs phi, psi and the grid to share the right endpoint");
  }
  WeakerReport report;
  std::vector<double> escape_ratios;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double gap = grid.gaps[i];
    if (!phi.in_support_gap(gap)) continue;
    const double phi_v = phi.at_gap(gap);
    if (!std::isfinite(phi_v)) break;  // past the double range
    const double psi_v = psi.at_gap(gap);
    const double ratio = std::isinf(psi_v) ? 0.0 : phi_v / psi_v;
    report.trace.push_back({grid.p(i), gap, phi_v, psi_v, ratio});
    if (phi_v > criterion.escape_threshold) escape_ratios.push_back(ratio);
  }

  if (escape_ratios.empty()) {
    report.verdict = Verdict::kInconclusive;
    report.reason = "phi stays below the escape threshold on the grid";
    return report;
  }
  if (escape_ratios.size() < criterion.monotone_window) {
    report.verdict = Verdict::kInconclusive;
    report.reason = "too few grid points in the escape set";
    return report;
  }
  const std::vector<double> tail(escape_ratios.end() - static_cast<std::ptrdiff_t>(criterion.monotone_window),
                                 escape_ratios.end());
  if (strictly_increasing(tail) && tail.back() > criterion.divergence_threshold) {
    report.verdict = Verdict::kWeaker;
    report.reason = "ratio increases past the divergence threshold";
    return report;
  }
  bool non_increasing = true;
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (tail[i] > tail[i - 1] * (1.0 + 1e-12)) non_increasing = false;
  }
  if (non_increasing) {
    report.verdict = Verdict::kNotWeaker;
    report.reason = "ratio does not grow on the escape set";
  } else {
    report.verdict = Verdict::kInconclusive;
    report.reason = "ratio grows but stays below the divergence threshold";
  }
  return report;
}

OrliczWeakerReport orlicz_weaker(const YoungFunction& Psi, const YoungFunction& Phi,
                                 const std::vector<double>& lambdas,
                                 const std::vector<double>& ugrid,
                                 const LimitCriterion& criterion) {
  if (lambdas.empty()) throw ParameterError("orlicz_weaker needs at least one lambda");
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw ParameterError("lambda values must be positive");
  }
  if (ugrid.size() < criterion.monotone_window || !strictly_increasing(ugrid) ||
      !(ugrid.front() > 0.0)) {
    throw ParameterError("u-grid must be positive, increasing and longer than the window");
  }
  const double log_small = -std::log(criterion.escape_threshold);

  OrliczWeakerReport report;
  bool any_fail = false;
  bool any_open = false;
  for (double lambda : lambdas) {
    std::vector<double> logs;
    logs.reserve(ugrid.size());
    bool nan = false;
    for (double u : ugrid) {
      const double l = Psi.log_value(lambda * u) - Phi.log_value(u);
      if (std::isnan(l)) nan = true;
      logs.push_back(l);
      report.trace.push_back({lambda, u, l});
    }
    if (nan) {
      any_open = true;
      continue;
    }
    const std::vector<double> tail(logs.end() - static_cast<std::ptrdiff_t>(criterion.monotone_window),
                                   logs.end());
    bool decreasing = true;
    for (std::size_t i = 1; i < tail.size(); ++i) {
      if (!(tail[i] < tail[i - 1])) decreasing = false;
    }
    const bool small = tail.back() < log_small;
    if (decreasing && small) continue;
    if (!decreasing && !small) {
      any_fail = true;
      if (report.reason.empty()) {
        report.reason = "Psi(lambda u)/Phi(u) does not tend to 0 at lambda = " +
                        detail::shortest(lambda);
      }
    } else {
      any_open = true;
    }
  }
  if (any_fail) {
    report.verdict = Verdict::kNotWeaker;
  } else if (any_open) {
    report.verdict = Verdict::kInconclusive;
    report.reason = "ratio indeterminate at this grid resolution";
  } else {
    report.verdict = Verdict::kWeaker;
    report.reason = "ratio decreases to 0 for every lambda";
  }
  return report;
}

std::vector<double> default_u_grid(std::size_t points) {
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::pow(10.0, 4.0 * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return grid;
}

}  // namespace glslab
