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

#include <cstddef>
#include <functional>
#include <limits>

#include "glslab/function.hpp"

namespace glslab {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 60;
  /// Map (0,1) onto (0,inf) by x = exp(-t) for kernels singular at 0 (or
  /// x = 1 - exp(-t) when singular at 1).
  bool substitute_singular = true;
  std::size_t max_intervals = 20000;

  /// Throws ParameterError for non-positive tolerances or depth < 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

enum class QuadratureStatus { kConverged, kBudgetExhausted, kNonFinite };

struct QuadratureOutcome {
  QuadratureStatus status = QuadratureStatus::kConverged;
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;

  bool ok() const noexcept { return status == QuadratureStatus::kConverged; }
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b] with a global error heap.
QuadratureOutcome integrate_interval(const std::function<double(double)>& h, double a, double b,
                                     const QuadratureConfig& cfg);

/// Integral of h over (0,1) using the singular substitution when flagged.
/// `t_max` truncates the substituted variable t (used for divergence witnesses).
QuadratureOutcome integrate_unit(const std::function<double(double)>& h, bool singular_at_zero,
                                 bool singular_at_one, const QuadratureConfig& cfg,
                                 double t_max = std::numeric_limits<double>::infinity());

/// As above; `log_outer` maps log|v| to log(outer(v)) and is used near
/// singular endpoints, where outer alone would overflow.
QuadratureOutcome try_integrate(const UnitIntervalFunction& f,
                                const std::function<double(double)>& outer,
                                const std::function<double(double)>& log_outer,
                                const QuadratureConfig& cfg,
                                double t_max = std::numeric_limits<double>::infinity());

/// Integral over (0,1) of outer(f(x)); `outer` must vanish at 0. Pieces are
/// integrated separately in their local coordinate and weighted by their mass.
QuadratureOutcome try_integrate(const UnitIntervalFunction& f,
                                const std::function<double(double)>& outer,
                                const QuadratureConfig& cfg,
                                double t_max = std::numeric_limits<double>::infinity());

/// Integral of f over (0,1); throws QuadratureError on non-convergence.
QuadratureResult integrate(const UnitIntervalFunction& f, const QuadratureConfig& cfg = {});

/// Integral of outer(f); throws QuadratureError on non-convergence.
QuadratureResult integrate(const UnitIntervalFunction& f,
                           const std::function<double(double)>& outer,
                           const QuadratureConfig& cfg = {});

}  // namespace glslab
