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
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "glslab/function.hpp"
#include "glslab/quadrature.hpp"
#include "glslab/young.hpp"

namespace glslab {

enum class PsiFamily { kNatural, kPowerSingular, kDegenerate, kConstant, kMomentPower, kCustom };

std::string to_string(PsiFamily family);

/// Generating function of a Grand Lebesgue space: positive on its support
/// [a, b] (or [a, b) when right-open), +inf elsewhere.
class PsiFunction {
 public:
  using Evaluator = std::function<double(double)>;

  /// (b - p)^(-beta) on [1, b), beta >= 0.
  static PsiFunction power_singular(double beta, double b);
  /// 1 at p = r, +inf elsewhere.
  static PsiFunction degenerate(double r);
  /// `value` on [a, b].
  static PsiFunction constant(double value, double a, double b);
  /// p^gamma on [a, b] (b may be infinite); gamma = 1/2 gives the subgaussian psi.
  static PsiFunction moment_power(double gamma, double a = 1.0,
                                  double b = std::numeric_limits<double>::infinity());
  static PsiFunction custom(std::string name, Evaluator eval, double a, double b,
                            bool right_open = false);
  /// Tagged record: "power-singular:<beta>:<b>", "degenerate:<r>",
  /// "constant:<value>:<a>:<b>", "moment-power:<gamma>[:<a>:<b>]".
  static PsiFunction from_record(const std::string& record);

  double operator()(double p) const;
  /// psi(b - gap). Exact for closed-form families even when b - gap rounds to b.
  double at_gap(double gap) const;

  PsiFamily family() const noexcept { return family_; }
  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }
  bool right_open() const noexcept { return right_open_; }
  bool in_support(double p) const noexcept;
  /// Whether b - gap lies in the support, decided on the gap itself.
  bool in_support_gap(double gap) const noexcept;
  double beta() const noexcept { return beta_; }
  double degenerate_point() const noexcept { return r_; }
  std::string to_record() const;

 private:
  friend PsiFunction make_natural_psi(const UnitIntervalFunction&, double, const QuadratureConfig&);
  PsiFunction(PsiFamily family, double a, double b, bool right_open, Evaluator eval,
              Evaluator gap_eval);

  PsiFamily family_;
  double a_;
  double b_;
  bool right_open_;
  double beta_ = 0.0;
  double r_ = 0.0;
  double gamma_ = 0.0;
  double constant_ = 0.0;
  std::string name_;
  Evaluator eval_;
  Evaluator gap_eval_;
};

/// nu(p) = |f|_p on [1, pmax]. Throws DivergenceError when |f|_pmax diverges.
PsiFunction make_natural_psi(const UnitIntervalFunction& f, double pmax,
                             const QuadratureConfig& cfg = {});

enum class Verdict { kWeaker, kNotWeaker, kInconclusive };

std::string to_string(Verdict verdict);

struct LimitCriterion {
  double escape_threshold = 1e3;
  double divergence_threshold = 1e6;
  std::size_t monotone_window = 10;
};

/// Exponent grid accumulating at b: p_k = b - b 2^-k for k_first <= k <= k_last,
/// keeping only points with p_k >= a. Points carry the gap b - p_k exactly.
struct GapGrid {
  double b = 4.0;
  std::vector<double> gaps;

  static GapGrid toward(double a, double b, int k_last = 1000);
  double p(std::size_t i) const { return b - gaps[i]; }
  std::size_t size() const noexcept { return gaps.size(); }
};

struct RatioTraceRow {
  double p;
  double gap;
  double phi;
  double psi;
  double ratio;
};

struct WeakerReport {
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
  std::vector<RatioTraceRow> trace;
};

/// Is phi significantly weaker than psi in the GLS sense, i.e. phi/psi -> inf
/// as phi -> inf? Judged on the grid points where phi exceeds the escape threshold.
WeakerReport gls_weaker(const PsiFunction& phi, const PsiFunction& psi, const GapGrid& grid,
                        const LimitCriterion& criterion = {});

struct OrliczTraceRow {
  double lambda;
  double u;
  double log_ratio;  // log Psi(lambda u) - log Phi(u)
};

struct OrliczWeakerReport {
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
  std::vector<OrliczTraceRow> trace;
};

/// Is Psi significantly weaker than Phi in the Orlicz sense: Psi(lambda u)/Phi(u) -> 0
/// for every lambda? Ratios are compared in logarithmic form.
OrliczWeakerReport orlicz_weaker(const YoungFunction& Psi, const YoungFunction& Phi,
                                 const std::vector<double>& lambdas,
                                 const std::vector<double>& ugrid,
                                 const LimitCriterion& criterion = {});

/// Geometric u-grid from 1 to 1e4.
std::vector<double> default_u_grid(std::size_t points = 200);

}  // namespace glslab
