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
#include <span>

namespace glslab {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Certified enclosure of an infinite series: partial sum plus integral-test
/// bracket for the tail. `value` is the point estimate used downstream.
struct SeriesBracket {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::uint64_t terms = 0;
  bool divergent = false;

  double half_width() const noexcept { return 0.5 * (upper - lower); }
  double relative_width() const noexcept { return (upper - lower) / value; }
  bool contains(double x) const noexcept { return x >= lower && x <= upper; }
};

/// Integral from `from` to infinity of x^-(1+s) dx = from^-s / s, s > 0.
double power_tail_integral(double from, double s);

/// Sum over n >= 1 of n^-(1+s), s > 0: ascending compensated partial sum up to
/// `terms`, tail enclosed by [int_{N+1}^inf, int_N^inf]; value = partial + midpoint.
/// `log_n`, when given, holds log n at index n (index 0 unused).
SeriesBracket zeta_bracket(double s, std::uint64_t terms, std::span<const double> log_n = {});

}  // namespace glslab
