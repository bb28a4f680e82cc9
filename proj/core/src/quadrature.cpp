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

#include "glslab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "glslab/errors.hpp"

namespace glslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae and weights for the 15-point rule; Gauss weights for the
// embedded 7-point rule on xgk[1], xgk[3], xgk[5], xgk[7].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

struct RuleResult {
  double value;
  double error;
  bool finite;
};

RuleResult gauss_kronrod15(const std::function<double(double)>& h, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);

  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  const double fc = h(centre);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::fabs(res_k);
  bool finite = std::isfinite(fc);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = half * kXgk[jtw];
    const double f1 = h(centre - absc);
    const double f2 = h(centre + absc);
    finite = finite && std::isfinite(f1) && std::isfinite(f2);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    res_g += kWg[j] * (f1 + f2);
    res_k += kWgk[jtw] * (f1 + f2);
    res_abs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = half * kXgk[jtwm1];
    const double f1 = h(centre - absc);
    const double f2 = h(centre + absc);
    finite = finite && std::isfinite(f1) && std::isfinite(f2);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    res_k += kWgk[jtwm1] * (f1 + f2);
    res_abs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }
  if (!finite) return {kInf, kInf, false};

  const double mean = 0.5 * res_k;
  double res_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
  }
  const double value = res_k * half;
  res_abs *= abs_half;
  res_asc *= abs_half;
  double error = std::fabs((res_k - res_g) * half);
  if (res_asc != 0.0 && error != 0.0) {
    error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * res_abs, error);
  }
  return {value, error, true};
}

double tolerance(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
}

QuadratureOutcome combine(QuadratureOutcome lhs, const QuadratureOutcome& rhs) {
  lhs.value += rhs.value;
  lhs.error += rhs.error;
  lhs.evaluations += rhs.evaluations;
  lhs.status = std::max(lhs.status, rhs.status);
  return lhs;
}

// g is the integrand in t, Jacobian included. An infinite range is covered by
// segments [e, 2e] until they stop contributing; near-critical integrands such
// as exp(-1e-9 t) put their mass at t ~ 1e9, out of reach of a map onto (0,1).
QuadratureOutcome integrate_depth(const std::function<double(double)>& g, double t_lo, double t_hi,
                                  const QuadratureConfig& cfg) {
  if (std::isfinite(t_hi)) return integrate_interval(g, t_lo, t_hi, cfg);
  constexpr double kLastEdge = 1e300;
  QuadratureOutcome total;
  double a = t_lo;
  double b = t_lo + 1.0;
  double previous = kInf;
  while (true) {
    // Integrands formed as exp(x - t) carry a rounding floor of order eps * t.
    QuadratureConfig local = cfg;
    local.rel_tol = std::max(cfg.rel_tol, 64.0 * std::numeric_limits<double>::epsilon() * b);
    const QuadratureOutcome part = integrate_interval(g, a, b, local);
    total = combine(total, part);
    if (total.status == QuadratureStatus::kNonFinite) return total;
    const double magnitude = std::fabs(part.value) + part.error;
    const bool negligible = magnitude <= 1e-3 * cfg.rel_tol * std::fabs(total.value) &&
                            magnitude <= previous;
    if (negligible || (total.value == 0.0 && b > 1e3)) return total;
    if (b >= kLastEdge) break;
    previous = magnitude;
    a = b;
    b *= 2.0;
  }
  total.status = QuadratureStatus::kBudgetExhausted;
  return total;
}

// Integral over (t_lo, t_hi) of h(x(t)) |dx/dt| where x = exp(-t) (from_zero)
// or x = 1 - exp(-t).
QuadratureOutcome integrate_substituted(const std::function<double(double)>& h, bool from_zero,
                                        double t_lo, double t_hi, const QuadratureConfig& cfg) {
  auto in_t = [&h, from_zero](double t) {
    const double w = std::exp(-t);
    if (w == 0.0) return 0.0;
    const double x = from_zero ? w : -std::expm1(-t);
    if (x == 1.0) return 0.0;
    return h(x) * w;
  };
  return integrate_depth(in_t, t_lo, t_hi, cfg);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw ParameterError("quadrature tolerances must be strictly positive");
  }
  if (max_depth < 1) throw ParameterError("quadrature depth must be at least 1");
  if (max_intervals < 1) throw ParameterError("quadrature interval budget must be positive");
}

QuadratureOutcome integrate_interval(const std::function<double(double)>& h, double a, double b,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  QuadratureOutcome out;
  if (a == b) return out;

  const RuleResult first = gauss_kronrod15(h, a, b);
  out.evaluations = 15;
  if (!first.finite) {
    out.status = QuadratureStatus::kNonFinite;
    out.value = kInf;
    out.error = kInf;
    return out;
  }

  std::priority_queue<Segment> active;
  std::vector<Segment> frozen;
  active.push({a, b, first.value, first.error, 0});
  double total = first.value;
  double total_error = first.error;
  std::size_t intervals = 1;

  while (total_error > tolerance(cfg, total)) {
    if (active.empty() || intervals >= cfg.max_intervals) {
      out.status = QuadratureStatus::kBudgetExhausted;
      break;
    }
    const Segment worst = active.top();
    active.pop();
    if (worst.depth >= cfg.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const RuleResult left = gauss_kronrod15(h, worst.a, mid);
    const RuleResult right = gauss_kronrod15(h, mid, worst.b);
    out.evaluations += 30;
    if (!left.finite || !right.finite) {
      out.status = QuadratureStatus::kNonFinite;
      out.value = kInf;
      out.error = kInf;
      return out;
    }
    active.push({worst.a, mid, left.value, left.error, worst.depth + 1});
    active.push({mid, worst.b, right.value, right.error, worst.depth + 1});
    ++intervals;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;

    if (total_error <= tolerance(cfg, total)) {
      // Re-sum from scratch before accepting; the running totals drift.
      double v = 0.0;
      double e = 0.0;
      auto heap_copy = active;
      while (!heap_copy.empty()) {
        v += heap_copy.top().value;
        e += heap_copy.top().error;
        heap_copy.pop();
      }
      for (const auto& s : frozen) {
        v += s.value;
        e += s.error;
      }
      total = v;
      total_error = e;
    }
  }
  out.value = total;
  out.error = total_error;
  return out;
}

QuadratureOutcome integrate_unit(const std::function<double(double)>& h, bool singular_at_zero,
                                 bool singular_at_one, const QuadratureConfig& cfg,
                                 double t_max) {
  if (!cfg.substitute_singular || (!singular_at_zero && !singular_at_one)) {
    return integrate_interval(h, 0.0, 1.0, cfg);
  }
  if (singular_at_zero && !singular_at_one) {
    return integrate_substituted(h, true, 0.0, t_max, cfg);
  }
  if (singular_at_one && !singular_at_zero) {
    return integrate_substituted(h, false, 0.0, t_max, cfg);
  }
  QuadratureConfig half = cfg;
  half.abs_tol = 0.5 * cfg.abs_tol;
  const double ln2 = std::log(2.0);
  const double t_hi = std::max(t_max, ln2);
  return combine(integrate_substituted(h, true, ln2, t_hi, half),
                 integrate_substituted(h, false, ln2, t_hi, half));
}

QuadratureOutcome try_integrate(const UnitIntervalFunction& f,
                                const std::function<double(double)>& outer,
                                const QuadratureConfig& cfg, double t_max) {
  return try_integrate(f, outer, {}, cfg, t_max);
}

QuadratureOutcome try_integrate(const UnitIntervalFunction& f,
                                const std::function<double(double)>& outer,
                                const std::function<double(double)>& log_outer,
                                const QuadratureConfig& cfg, double t_max) {
  cfg.validate();
  QuadratureOutcome total;
  for (const auto& piece : f.pieces()) {
    QuadratureOutcome local;
    const double amplitude = piece.amplitude;
    const Kernel& kernel = piece.kernel;
    if (kernel.shape() == KernelShape::kUnit) {
      // Constant integrand; every rule is exact.
      local.value = outer(amplitude);
      local.evaluations = 1;
      if (!std::isfinite(local.value)) {
        local.status = QuadratureStatus::kNonFinite;
        local.error = kInf;
      }
    } else if (!log_outer || !cfg.substitute_singular ||
               (!kernel.singular_at_zero() && !kernel.singular_at_one())) {
      auto integrand = [&outer, &kernel, amplitude](double s) {
        return outer(amplitude * kernel(s));
      };
      local = integrate_unit(integrand, kernel.singular_at_zero(), kernel.singular_at_one(), cfg,
                             t_max);
    } else {
      // outer(v) e^-t is formed as exp(log outer(v) - t) so that large outer
      // values far down the singularity do not overflow before the weight.
      const double log_amplitude = std::log(std::fabs(amplitude));
      auto weighted = [&log_outer](double log_v, double t) {
        if (log_v == -kInf) return 0.0;
        return std::exp(log_outer(log_v) - t);
      };
      auto near_zero = [&](double t) { return weighted(log_amplitude + kernel.log_at_depth(t), t); };
      auto near_one = [&](double t) {
        const double x = -std::expm1(-t);
        if (x == 1.0) return 0.0;
        return weighted(log_amplitude + std::log(kernel(x)), t);
      };
      const bool s0 = kernel.singular_at_zero();
      const bool s1 = kernel.singular_at_one();
      if (s0 && !s1) {
        local = integrate_depth(near_zero, 0.0, t_max, cfg);
      } else if (s1 && !s0) {
        local = integrate_depth(near_one, 0.0, t_max, cfg);
      } else {
        QuadratureConfig half = cfg;
        half.abs_tol = 0.5 * cfg.abs_tol;
        const double ln2 = std::log(2.0);
        const double t_hi = std::max(t_max, ln2);
        local = combine(integrate_depth(near_zero, ln2, t_hi, half),
                        integrate_depth(near_one, ln2, t_hi, half));
      }
    }
    local.value *= piece.mass;
    local.error *= piece.mass;
    total = combine(total, local);
  }
  if (total.status == QuadratureStatus::kNonFinite) {
    total.value = kInf;
    total.error = kInf;
  }
  return total;
}

QuadratureResult integrate(const UnitIntervalFunction& f,
                           const std::function<double(double)>& outer,
                           const QuadratureConfig& cfg) {
  const QuadratureOutcome out = try_integrate(f, outer, cfg);
  if (!out.ok()) {
    throw QuadratureError(out.status == QuadratureStatus::kNonFinite
                              ? "integrand is not finite on the integration range"
                              : "adaptive quadrature did not converge within the depth budget",
                          out.value, out.error);
  }
  return {out.value, out.error, out.evaluations};
}

QuadratureResult integrate(const UnitIntervalFunction& f, const QuadratureConfig& cfg) {
  return integrate(f, [](double v) { return v; }, cfg);
}

}  // namespace glslab
