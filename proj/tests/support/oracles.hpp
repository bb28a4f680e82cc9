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

#include <cmath>
#include <cstdint>

// Reference values computed outside the library (50-digit arithmetic) or from
// closed forms evaluated here with the standard library.
namespace oracle {

inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta4 = 1.0823232337111381915;
inline constexpr double kZeta5 = 1.0369277551433699263;

inline constexpr double kInvZeta5 = 0.96438734042926200000;  // 1 / zeta(5)
inline constexpr double kInvZeta3 = 0.83190737258070746868;  // 1 / zeta(3)
inline constexpr double kOneMinusInvZeta5 = 0.0356126595707375;
inline constexpr double kInvZeta5TimesZeta4 = 1.04377882484348;

// sup_t t^-1/2 * integral_0^t sqrt(log 1/s) ds, attained at t = 0.75382...
inline constexpr double kLorentzSqrtLogHalf = 0.92309764872661085;
// Luxemburg norm of sqrt(log 1/x) under exp(|u|) - 1.
inline constexpr double kLuxExpLinearSqrtLog = 1.3972938181910714;

// Constant 1 under exp(u^2/2) - 1 and exp(|u|) - 1.
inline double lux_exp_square_of_one() { return 1.0 / std::sqrt(2.0 * std::log(2.0)); }
inline double lux_exp_linear_of_one() { return 1.0 / std::log(2.0); }

// |sqrt(log 1/x)|_p^p = Gamma(p/2 + 1).
inline double sqrt_log_moment(double p) { return std::tgamma(0.5 * p + 1.0); }

// sum_{n >= 1} n^-s by direct summation to N plus Euler-Maclaurin tail terms.
inline double zeta(double s) {
  const int N = 2000;
  long double sum = 0.0L;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double x = N;
  const long double fx = std::pow(x, -s);
  sum += x * fx / (s - 1.0) + 0.5L * fx + s * fx / (12.0L * x) -
         s * (s + 1) * (s + 2) * fx / (720.0L * x * x * x);
  return static_cast<double>(sum);
}

// Independent C(beta) = 1 / zeta(4 beta + 1).
inline double normalization(double beta) { return 1.0 / zeta(4.0 * beta + 1.0); }

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace oracle
