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

#include "glslab/series.hpp"

#include <cmath>
#include <limits>

#include "glslab/errors.hpp"

namespace glslab {

double power_tail_integral(double from, double s) {
  if (!(s > 0.0)) throw ParameterError("tail integral needs a positive exponent excess");
  if (!(from > 0.0)) throw ParameterError("tail integral needs a positive lower limit");
  return std::pow(from, -s) / s;
}

SeriesBracket zeta_bracket(double s, std::uint64_t terms, std::span<const double> log_n) {
  if (!(s > 0.0)) throw ParameterError("series exponent must exceed 1");
  if (terms < 1) throw ParameterError("series needs at least one term");
  const bool table = log_n.size() > terms;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  CompensatedSum partial;
  double rounding = 0.0;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const double ln = table ? log_n[n] : std::log(static_cast<double>(n));
    const double arg = (1.0 + s) * ln;
    const double term = std::exp(-arg);
    partial.add(term);
    // exp amplifies the absolute error of its argument
    rounding += term * (arg + 2.0) * eps;
  }
  const double n_terms = static_cast<double>(terms);
  const double tail_lo = power_tail_integral(n_terms + 1.0, s);
  const double tail_hi = power_tail_integral(n_terms, s);
  SeriesBracket out;
  out.terms = terms;
  rounding += 2.0 * eps * (partial.value() + tail_hi);
  out.lower = partial.value() + tail_lo - rounding;
  out.upper = partial.value() + tail_hi + rounding;
  out.value = partial.value() + 0.5 * (tail_lo + tail_hi);
  return out;
}

}  // namespace glslab
