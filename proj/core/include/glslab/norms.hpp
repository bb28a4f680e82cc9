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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glslab/function.hpp"
#include "glslab/psi.hpp"
#include "glslab/quadrature.hpp"
#include "glslab/young.hpp"

namespace glslab {

enum class NormMethod {
  kLebesgue,
  kGrandLebesgue,
  kLuxemburg,
  kLorentz,
  kSeries,
  kClosedForm,
};

std::string to_string(NormMethod method);

struct Witness {
  double parameter;
  double value;
};

/// Outcome of a norm computation: a finite value with an error estimate, or a
/// DIVERGENT marker backed by a monotone witness sequence.
struct NormReport {
  double value = 0.0;
  bool divergent = false;
  NormMethod method = NormMethod::kLebesgue;
  double error = 0.0;
  /// Maximising p (GLS), maximising t (Lorentz), evaluation point p (Lp).
  std::optional<double> argmax;
  std::vector<Witness> witness;

  bool finite() const noexcept { return !divergent; }
  static NormReport make_divergent(NormMethod method, std::vector<Witness> witness,
                                   std::optional<double> where = std::nullopt);
};

struct DivergenceCriterion {
  double threshold = 1e6;
  std::size_t monotone_window = 10;
};

/// True when the last `window` witness values are strictly increasing and the
/// final one exceeds the threshold.
bool certifies_divergence(const std::vector<Witness>& witness, const DivergenceCriterion& c = {});

/// (integral of |f|^p)^(1/p), p >= 1.
NormReport lp_norm(const UnitIntervalFunction& f, double p, const QuadratureConfig& cfg = {});

struct GlsOptions {
  std::size_t grid_points = 200;
  /// Upper end of the scan when the support is unbounded.
  double p_cap = 100.0;
  /// Smallest distance to a right-open endpoint, as a fraction of (b - a).
  double endpoint_gap = 0x1p-40;
  int golden_iterations = 80;
  DivergenceCriterion divergence;
};

/// The scan grid used by gls_norm for a support: geometric accumulation at a
/// right-open finite endpoint, geometric spacing for an unbounded one, and
/// uniform spacing (endpoints included) for a closed finite support.
std::vector<double> gls_scan_grid(const PsiFunction& psi, const GlsOptions& opts = {});

/// sup_p |f|_p / psi(p), with C / inf = 0.
NormReport gls_norm(const UnitIntervalFunction& f, const PsiFunction& psi,
                    const GlsOptions& opts = {}, const QuadratureConfig& cfg = {});

struct LuxemburgOptions {
  double rel_tol = 1e-14;
  int max_expansions = 64;
};

/// Mean of Phi(|f| / k), the quantity the Luxemburg norm pins to 1.
QuadratureOutcome luxemburg_modular(const UnitIntervalFunction& f, const YoungFunction& Phi,
                                    double k, const QuadratureConfig& cfg = {});

/// inf { k > 0 : mean of Phi(|f| / k) <= 1 }; `argmax` holds the modular at the root.
NormReport luxemburg_norm(const UnitIntervalFunction& f, const YoungFunction& Phi,
                          const QuadratureConfig& cfg = {}, const LuxemburgOptions& opts = {});

/// P(|f| > lambda).
double distribution_function(const UnitIntervalFunction& f, double lambda);
/// log P(|f| > lambda), accurate far into the tail.
double log_distribution_function(const UnitIntervalFunction& f, double lambda);

/// Decreasing rearrangement f*(s) = inf { lambda : P(|f| > lambda) <= s },
/// evaluated from log s so that s may lie far below the double range.
double rearranged_at_log(const UnitIntervalFunction& f, double log_s);
double rearranged(const UnitIntervalFunction& f, double s);
/// f* as a function on (0,1).
UnitIntervalFunction decreasing_rearrangement(const UnitIntervalFunction& f);

/// Continuous strictly increasing v on (0,1] with v(0+) = 0.
class LorentzWeight {
 public:
  using Evaluator = std::function<double(double)>;

  /// v(t) = t^alpha, alpha > 0.
  static LorentzWeight power(double alpha);
  /// `log_eval` receives log t; defaults to log(eval(exp(log t))).
  static LorentzWeight custom(std::string name, Evaluator eval, Evaluator log_eval = {});

  double operator()(double t) const { return eval_(t); }
  double log_at(double log_t) const { return log_eval_(log_t); }
  const std::string& name() const noexcept { return name_; }

 private:
  LorentzWeight(std::string name, Evaluator eval, Evaluator log_eval);

  std::string name_;
  Evaluator eval_;
  Evaluator log_eval_;
};

/// Grid on (0,1] stored as log t values in decreasing order of t.
struct LorentzGrid {
  std::vector<double> log_t;

  /// t = 1 followed by t = exp(-tau) with tau geometric on [tau_min, tau_max].
  static LorentzGrid standard(std::size_t points = 200, double tau_min = 1e-4,
                              double tau_max = 1e14);
  static LorentzGrid from_values(const std::vector<double>& t);
};

/// (1/t) * integral over (0,t) of f*(s) ds, from log t.
QuadratureOutcome rearranged_mean(const UnitIntervalFunction& f, double log_t,
                                  const QuadratureConfig& cfg = {});

/// sup over the grid of (1 / v(t)) * integral_0^t f*(s) ds.
NormReport lorentz_norm(const UnitIntervalFunction& f, const LorentzWeight& v,
                        const LorentzGrid& grid = LorentzGrid::standard(),
                        const QuadratureConfig& cfg = {}, const DivergenceCriterion& c = {});

}  // namespace glslab
